/** A refinement draft: operations staged locally against a known model
 * version, submitted as one all-or-nothing patch. */

import type { GoalVizClient } from "./api.js";
import { ApiError } from "./api.js";
import type { ChannelName, ModelResponse, OrientationName, RefinementOp } from "./types.js";

/** The server's model moved under the draft; rebase onto currentVersion. */
export class StaleDraftError extends Error {
  constructor(readonly currentVersion: string) {
    super(`draft is based on a stale model version; current is ${currentVersion}`);
    this.name = "StaleDraftError";
  }
}

export class RefinementDraft {
  private staged: RefinementOp[] = [];

  constructor(private base: string) {}

  get baseVersion(): string {
    return this.base;
  }

  get ops(): readonly RefinementOp[] {
    return this.staged;
  }

  get size(): number {
    return this.staged.length;
  }

  add(op: RefinementOp): this {
    this.staged.push(op);
    return this;
  }

  removeAt(index: number): void {
    if (index < 0 || index >= this.staged.length) {
      throw new RangeError(`no staged operation at index ${index}`);
    }
    this.staged.splice(index, 1);
  }

  clear(): void {
    this.staged = [];
  }

  moveAttribute(attribute: string, channel: ChannelName): this {
    return this.add({ op: "set_channel", attribute, channel });
  }

  setOrientation(orientation: OrientationName): this {
    return this.add({ op: "set_orientation", orientation });
  }

  setTitle(title: string): this {
    return this.add({ op: "set_title", title });
  }

  toPatchBody(): { base_version: string; ops: RefinementOp[] } {
    return { base_version: this.base, ops: [...this.staged] };
  }

  /** Keep the staged operations but target a newer model version. */
  rebase(version: string): void {
    this.base = version;
  }

  /** Apply the draft. On success the draft empties and re-bases onto the
   * returned version; a version conflict surfaces as StaleDraftError. */
  async submit(
    client: GoalVizClient,
    projectId: string,
    vid: string,
  ): Promise<ModelResponse> {
    let response: ModelResponse;
    try {
      response = await client.patchModel(projectId, vid, this.base, [...this.staged]);
    } catch (error) {
      if (
        error instanceof ApiError &&
        error.status === 409 &&
        typeof error.detail === "object" &&
        typeof error.detail.current_version === "string"
      ) {
        throw new StaleDraftError(error.detail.current_version);
      }
      throw error;
    }
    this.staged = [];
    this.base = response.version;
    return response;
  }
}
