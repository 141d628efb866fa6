/** HTML fragment builders. Pure string functions so they are testable
 * without a DOM; main.ts assigns the results to innerHTML. */

import { encodingRows } from "./chartdoc.js";
import { formatDimensionality, specCoordinates, titleFromSnake } from "./format.js";
import type { ChartDoc, EntryView, IterationRecordPayload, Question } from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

/** The derived entry: chosen graphic, matched rule, and the seven
 * specification coordinates. */
export function renderEntryPanel(entry: EntryView): string {
  const parts: string[] = [];
  parts.push(`<h2>${escapeHtml(entry.name)}</h2>`);
  parts.push(`<p class="information-goal">${escapeHtml(entry.information_goal)}</p>`);
  if (entry.graphic_type === null || entry.spec === null) {
    parts.push('<p class="placeholder">Not derived yet.</p>');
    return parts.join("\n");
  }
  parts.push(
    `<p class="selection">${escapeHtml(titleFromSnake(entry.graphic_type))}` +
      (entry.rule === null ? "" : ` <small>(rule ${escapeHtml(entry.rule)})</small>`) +
      "</p>",
  );
  parts.push('<dl class="spec">');
  for (const row of specCoordinates(entry.spec)) {
    parts.push(`  <dt>${escapeHtml(row.label)}</dt><dd>${escapeHtml(row.value)}</dd>`);
  }
  parts.push("</dl>");
  if (entry.needs_revision) {
    parts.push('<p class="needs-revision">Marked as requiring revision.</p>');
  }
  return parts.join("\n");
}

/** A compact ChartDoc preview: header, encodings, and the data table. */
export function renderChartPreview(doc: ChartDoc, maxRows = 20): string {
  const parts: string[] = [];
  parts.push(`<h3>${escapeHtml(doc.title)}</h3>`);
  parts.push(
    `<p class="doc-meta">${escapeHtml(titleFromSnake(doc.graphic_type))}, ` +
      `${escapeHtml(formatDimensionality(doc.orientation))}</p>`,
  );
  const rows = encodingRows(doc);
  parts.push('<ul class="encodings">');
  for (const { channel, encoding } of rows) {
    const attribute = encoding.attribute ?? "(count)";
    const scale = encoding.scale_type === null ? "" : ` : ${titleFromSnake(encoding.scale_type)}`;
    const order = encoding.order_role ? " (ordering)" : "";
    parts.push(
      `  <li>${escapeHtml(channel.toUpperCase())} &rarr; ` +
        `${escapeHtml(attribute)}${escapeHtml(scale)}${order}</li>`,
    );
  }
  parts.push("</ul>");

  const columns = rows
    .map(({ encoding }) => encoding.attribute)
    .filter((name): name is string => name !== null);
  parts.push("<table><thead><tr>");
  for (const column of columns) {
    parts.push(`<th>${escapeHtml(column)}</th>`);
  }
  parts.push("</tr></thead><tbody>");
  for (const row of doc.data.slice(0, maxRows)) {
    parts.push("<tr>");
    for (const column of columns) {
      parts.push(`<td>${escapeHtml(String(row[column] ?? ""))}</td>`);
    }
    parts.push("</tr>");
  }
  parts.push("</tbody></table>");
  if (doc.data.length > maxRows) {
    parts.push(`<p class="truncated">${doc.data.length - maxRows} more row(s) not shown.</p>`);
  }
  return parts.join("\n");
}

export function renderQuestionnaire(questions: readonly Question[]): string {
  const parts: string[] = ['<form class="questionnaire">'];
  for (const question of questions) {
    const goal = escapeHtml(question.goal);
    parts.push("  <fieldset>");
    parts.push(`    <legend>${escapeHtml(question.text)}</legend>`);
    parts.push(
      `    <label><input type="radio" name="${goal}" value="yes"> Yes</label>`,
    );
    parts.push(
      `    <label><input type="radio" name="${goal}" value="no"> No</label>`,
    );
    parts.push("  </fieldset>");
  }
  parts.push('  <button type="submit">Record validation</button>');
  parts.push("</form>");
  return parts.join("\n");
}

export function renderHistory(records: readonly IterationRecordPayload[]): string {
  if (records.length === 0) {
    return '<p class="placeholder">No validation iterations yet.</p>';
  }
  const parts: string[] = ['<ol class="history">'];
  for (const record of records) {
    const outcome =
      record.status === "validated"
        ? "validated"
        : `requires revision (${record.failed_goals.map(titleFromSnake).join(", ")})`;
    parts.push(
      `  <li>${escapeHtml(record.timestamp)}: ${escapeHtml(record.visualization)} ` +
        `${escapeHtml(outcome)}</li>`,
    );
  }
  parts.push("</ol>");
  return parts.join("\n");
}
