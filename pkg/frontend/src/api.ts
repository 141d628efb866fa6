/** Typed fetch client for the goalviz HTTP API. */

import type {
  ApiErrorDetail,
  DerivedEntryView,
  ModelResponse,
  ProjectView,
  Question,
  RefinementOp,
  ValidationResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string | ApiErrorDetail,
  ) {
    super(typeof detail === "string" ? detail : detail.message);
    this.name = "ApiError";
  }
}

export class GoalVizClient {
  private readonly base: string;

  constructor(
    baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {
    this.base = baseUrl.replace(/\/+$/, "") + "/api/v1";
  }

  private async request(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<Response> {
    const response = await this.fetchFn(this.base + path, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let detail: string | ApiErrorDetail = response.statusText;
      try {
        detail = (await response.json()).detail;
      } catch {
        // a non-JSON error body keeps the status text
      }
      throw new ApiError(response.status, detail);
    }
    return response;
  }

  private async json<T>(method: string, path: string, body?: unknown): Promise<T> {
    return (await this.request(method, path, body)).json() as Promise<T>;
  }

  createProject(
    goals: string,
    id: string,
    datasets: Record<string, string> = {},
  ): Promise<ProjectView> {
    return this.json("POST", "/projects", { goals, id, datasets });
  }

  getProject(id: string): Promise<ProjectView> {
    return this.json("GET", `/projects/${id}`);
  }

  derive(id: string, vid: string): Promise<DerivedEntryView> {
    return this.json("POST", `/projects/${id}/visualizations/${vid}/derive`);
  }

  getModel(id: string, vid: string): Promise<ModelResponse> {
    return this.json("GET", `/projects/${id}/visualizations/${vid}/model`);
  }

  patchModel(
    id: string,
    vid: string,
    baseVersion: string,
    ops: RefinementOp[],
  ): Promise<ModelResponse> {
    return this.json("PATCH", `/projects/${id}/visualizations/${vid}/model`, {
      base_version: baseVersion,
      ops,
    });
  }

  async questionnaire(id: string, vid: string): Promise<Question[]> {
    const body = await this.json<{ questions: Question[] }>(
      "GET",
      `/projects/${id}/visualizations/${vid}/questionnaire`,
    );
    return body.questions;
  }

  validate(
    id: string,
    vid: string,
    answers: Record<string, boolean>,
  ): Promise<ValidationResponse> {
    return this.json("POST", `/projects/${id}/visualizations/${vid}/validate`, {
      answers,
    });
  }

  /** Raw canonical document bytes; ChartDoc, or GraphDoc for tree/graph
   * visualizations. Kept as text so byte fidelity is checkable. */
  async chartDocText(id: string, vid: string): Promise<string> {
    const response = await this.request(
      "GET",
      `/projects/${id}/visualizations/${vid}/chartdoc`,
    );
    return response.text();
  }

  async renderHtml(id: string, vid: string): Promise<string> {
    const response = await this.request(
      "GET",
      `/projects/${id}/visualizations/${vid}/render`,
    );
    return response.text();
  }
}
