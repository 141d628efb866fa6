/** Client-side session state: the loaded project, the selected
 * visualization, and its staged refinement draft. Pure transitions; the
 * DOM layer subscribes and re-renders. */

import { RefinementDraft } from "./draft.js";
import type { ModelResponse, ProjectView, ValidationResponse } from "./types.js";

export class SessionState {
  private project: ProjectView | null = null;
  private vid: string | null = null;
  private draft: RefinementDraft | null = null;
  private listeners: (() => void)[] = [];

  subscribe(listener: () => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }

  get currentProject(): ProjectView | null {
    return this.project;
  }

  get selectedVid(): string | null {
    return this.vid;
  }

  get currentDraft(): RefinementDraft | null {
    return this.draft;
  }

  get selectedEntry() {
    if (this.project === null || this.vid === null) {
      return null;
    }
    return this.project.visualizations[this.vid] ?? null;
  }

  /** Loading a project selects its first visualization. */
  loadProject(view: ProjectView): void {
    this.project = view;
    const vids = Object.keys(view.visualizations);
    this.vid = vids[0] ?? null;
    this.draft = this.makeDraft();
    this.notify();
  }

  select(vid: string): void {
    if (this.project === null || !(vid in this.project.visualizations)) {
      throw new Error(`unknown visualization ${vid}`);
    }
    this.vid = vid;
    this.draft = this.makeDraft();
    this.notify();
  }

  private makeDraft(): RefinementDraft | null {
    const version = this.selectedEntry?.model_version ?? null;
    return version === null ? null : new RefinementDraft(version);
  }

  /** Merge a fresh entry view (e.g. the derive response) into the project. */
  updateEntry(view: ProjectView["visualizations"][string]): void {
    if (this.project === null) {
      throw new Error("no project loaded");
    }
    this.project.visualizations[view.vid] = view;
    if (view.vid === this.vid) {
      this.draft = this.makeDraft();
    }
    this.notify();
  }

  /** Adopt the model version a successful patch returned. */
  applyModelResponse(response: ModelResponse): void {
    const entry = this.selectedEntry;
    if (entry === null) {
      throw new Error("no visualization selected");
    }
    entry.model_version = response.version;
    if (this.draft === null) {
      this.draft = new RefinementDraft(response.version);
    } else {
      this.draft.rebase(response.version);
    }
    this.notify();
  }

  applyValidation(result: ValidationResponse): void {
    const entry = this.selectedEntry;
    if (entry === null || this.project === null) {
      throw new Error("no visualization selected");
    }
    entry.needs_revision = result.needs_revision;
    entry.last_validation = result.record;
    this.project.history.push(result.record);
    this.notify();
  }

  /** One-line status for the banner area. */
  statusLine(): string {
    if (this.project === null) {
      return "No project loaded.";
    }
    const entry = this.selectedEntry;
    if (entry === null) {
      return `Project ${this.project.id}: no visualization selected.`;
    }
    if (entry.model_version === null) {
      return `${entry.vid}: not derived yet.`;
    }
    const staged = this.draft?.size ?? 0;
    const revision = entry.needs_revision ? ", needs revision" : "";
    return (
      `${entry.vid}: model ${entry.model_version}` +
      (staged > 0 ? `, ${staged} staged op(s)` : "") +
      revision
    );
  }
}
