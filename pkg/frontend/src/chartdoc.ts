/** ChartDoc helpers: parsing, the HTML embedding inverse, and display
 * summaries of the channel encodings. */

import type { ChannelName, ChartDoc, EncodingPayload } from "./types.js";

export const CHANNEL_ORDER: ChannelName[] = ["x", "y", "color", "size", "detail"];

/** The server embeds the document verbatim between these markers. */
export const DOC_SCRIPT_OPEN = '<script id="chart-doc" type="application/json">\n';
export const DOC_SCRIPT_CLOSE = "</script>";

/** Recover the embedded ChartDoc text from a rendered page. */
export function extractChartDoc(html: string): string {
  const start = html.indexOf(DOC_SCRIPT_OPEN);
  if (start < 0) {
    throw new Error("no embedded chart document found");
  }
  const from = start + DOC_SCRIPT_OPEN.length;
  const end = html.indexOf(DOC_SCRIPT_CLOSE, from);
  if (end < 0) {
    throw new Error("embedded chart document is not terminated");
  }
  return html.slice(from, end);
}

export function parseChartDoc(text: string): ChartDoc {
  return JSON.parse(text) as ChartDoc;
}

export interface EncodingRow {
  channel: ChannelName;
  encoding: EncodingPayload;
}

/** Bound encodings in canonical channel order. */
export function encodingRows(doc: ChartDoc): EncodingRow[] {
  const rows: EncodingRow[] = [];
  for (const channel of CHANNEL_ORDER) {
    const encoding = doc.encodings[channel];
    if (encoding !== undefined) {
      rows.push({ channel, encoding });
    }
  }
  return rows;
}
