/** Browser entry point: wires the API client, session state, and the HTML
 * fragment renderers onto the index.html shell. Kept thin; everything with
 * logic lives in the imported modules. */

import { ApiError, GoalVizClient } from "./api.js";
import { parseChartDoc } from "./chartdoc.js";
import { StaleDraftError } from "./draft.js";
import { QuestionnaireSession, summarizeValidation } from "./questionnaire.js";
import {
  renderChartPreview,
  renderEntryPanel,
  renderHistory,
  renderQuestionnaire,
} from "./render.js";
import { SessionState } from "./state.js";
import type { VisGoalName } from "./types.js";

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`index.html is missing #${id}`);
  }
  return node as T;
}

function describeError(error: unknown): string {
  if (error instanceof StaleDraftError) {
    return `Someone else changed the model (now ${error.currentVersion}); reload and retry.`;
  }
  if (error instanceof ApiError) {
    return `Request failed (${error.status}): ${error.message}`;
  }
  return String(error);
}

function start(): void {
  const client = new GoalVizClient(
    new URLSearchParams(window.location.search).get("api") ?? "",
  );
  const state = new SessionState();
  const status = element<HTMLParagraphElement>("status");
  const picker = element<HTMLSelectElement>("visualization");
  const panel = element<HTMLElement>("entry-panel");
  const preview = element<HTMLElement>("preview");
  const questionnaireBox = element<HTMLElement>("questionnaire");
  const historyBox = element<HTMLElement>("history");
  let session: QuestionnaireSession | null = null;

  state.subscribe(() => {
    status.textContent = state.statusLine();
    const project = state.currentProject;
    picker.replaceChildren(
      ...Object.keys(project?.visualizations ?? {}).map((vid) => {
        const option = document.createElement("option");
        option.value = vid;
        option.textContent = vid;
        option.selected = vid === state.selectedVid;
        return option;
      }),
    );
    const entry = state.selectedEntry;
    panel.innerHTML = entry === null ? "" : renderEntryPanel(entry);
    historyBox.innerHTML = renderHistory(project?.history ?? []);
  });

  async function refreshPreview(): Promise<void> {
    const project = state.currentProject;
    const vid = state.selectedVid;
    if (project === null || vid === null) {
      return;
    }
    const text = await client.chartDocText(project.id, vid);
    preview.innerHTML = renderChartPreview(parseChartDoc(text));
  }

  async function guard(action: () => Promise<void>): Promise<void> {
    try {
      await action();
    } catch (error) {
      status.textContent = describeError(error);
    }
  }

  element<HTMLButtonElement>("load").addEventListener("click", () =>
    guard(async () => {
      const id = element<HTMLInputElement>("project-id").value.trim();
      state.loadProject(await client.getProject(id));
    }),
  );

  picker.addEventListener("change", () => {
    state.select(picker.value);
    void guard(refreshPreview);
  });

  element<HTMLButtonElement>("derive").addEventListener("click", () =>
    guard(async () => {
      const project = state.currentProject;
      const vid = state.selectedVid;
      if (project === null || vid === null) {
        return;
      }
      state.updateEntry(await client.derive(project.id, vid));
      await refreshPreview();
    }),
  );

  element<HTMLButtonElement>("submit-draft").addEventListener("click", () =>
    guard(async () => {
      const project = state.currentProject;
      const vid = state.selectedVid;
      const draft = state.currentDraft;
      if (project === null || vid === null || draft === null) {
        return;
      }
      state.applyModelResponse(await draft.submit(client, project.id, vid));
      await refreshPreview();
    }),
  );

  element<HTMLButtonElement>("ask").addEventListener("click", () =>
    guard(async () => {
      const project = state.currentProject;
      const vid = state.selectedVid;
      if (project === null || vid === null) {
        return;
      }
      session = new QuestionnaireSession(
        await client.questionnaire(project.id, vid),
      );
      questionnaireBox.innerHTML = renderQuestionnaire(session.questions);
      questionnaireBox
        .querySelector("form")
        ?.addEventListener("submit", (event) => {
          event.preventDefault();
          void guard(async () => {
            if (session === null || project === null || vid === null) {
              return;
            }
            const form = event.target as HTMLFormElement;
            for (const question of session.questions) {
              const checked = form.querySelector<HTMLInputElement>(
                `input[name="${question.goal}"]:checked`,
              );
              if (checked !== null) {
                session.answer(question.goal as VisGoalName, checked.value === "yes");
              }
            }
            const result = await client.validate(
              project.id,
              vid,
              session.toAnswers(),
            );
            state.applyValidation(result);
            status.textContent = summarizeValidation(result);
          });
        });
    }),
  );
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", start);
}
