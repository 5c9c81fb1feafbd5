/** HTTP client for the play server.  Every legality decision is made by the
 * server; this module only moves JSON back and forth. */

import {
  asGameView,
  asHint,
  asOptions,
  type CreateRequest,
  type GameView,
  type Hint,
  type MoveBody,
  type OptionsReply,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: RequestInit,
) => Promise<Response>;

/** A structured error reply ({"error": code, "detail": text}). */
export class ApiError extends Error {
  constructor(
    readonly code: string,
    readonly detail: string,
    readonly status: number,
  ) {
    super(`${code}: ${detail}`);
  }
}

async function reject(res: Response): Promise<never> {
  let code = "http_error";
  let detail = `status ${res.status}`;
  try {
    const body = (await res.json()) as { error?: string; detail?: string };
    if (typeof body.error === "string") code = body.error;
    if (typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body: keep the generic code
  }
  throw new ApiError(code, detail, res.status);
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.base = baseUrl.replace(/\/+$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => fetch(url, init));
  }

  private async get(path: string): Promise<unknown> {
    const res = await this.fetchFn(this.base + path);
    if (!res.ok) await reject(res);
    return res.json();
  }

  private async post(path: string, body: unknown): Promise<unknown> {
    const res = await this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) await reject(res);
    return res.json();
  }

  async createGame(req: CreateRequest): Promise<GameView> {
    return asGameView(await this.post("/games", req));
  }

  async getGame(id: string): Promise<GameView> {
    return asGameView(await this.get(`/games/${id}`));
  }

  async getOptions(id: string, vertex: number): Promise<OptionsReply> {
    return asOptions(await this.get(`/games/${id}/options?vertex=${vertex}`));
  }

  async postMove(id: string, move: MoveBody): Promise<GameView> {
    return asGameView(await this.post(`/games/${id}/move`, move));
  }

  async engineMove(id: string): Promise<GameView> {
    return asGameView(await this.post(`/games/${id}/engine-move`, {}));
  }

  async getHint(id: string): Promise<Hint> {
    return asHint(await this.get(`/games/${id}/hint`));
  }
}
