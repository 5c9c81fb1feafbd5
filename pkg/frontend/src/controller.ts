/** Session controller: the glue between the API client and the UI state
 * machine.  DOM-free so the whole play loop can be driven headlessly in
 * tests; main.ts subscribes to re-render on every change.
 *
 * No optimistic updates: state only ever changes when a server response
 * lands.  One active session per controller (per tab). */

import { ApiClient, ApiError } from "./api.js";
import * as S from "./state.js";
import type { CreateRequest, GameView } from "./types.js";

export type Listener = (state: S.UiState) => void;

export class Controller {
  private state: S.UiState = S.initialState();
  private listeners: Listener[] = [];
  private busy = false;

  constructor(private readonly client: ApiClient) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
    fn(this.state);
  }

  current(): S.UiState {
    return this.state;
  }

  private emit(next: S.UiState): void {
    this.state = next;
    for (const fn of this.listeners) fn(next);
  }

  private async fromServer(
    call: () => Promise<GameView>,
  ): Promise<void> {
    try {
      const view = await call();
      this.emit(S.applyView(this.state, view));
      await this.driveEngine();
    } catch (err) {
      if (err instanceof ApiError) {
        this.emit(S.applyError(this.state, `${err.code}: ${err.detail}`));
        return;
      }
      throw err;
    }
  }

  /** Start a session; the engine is driven automatically when it owns the
   * pending half (e.g. the human sits in the responder seat). */
  async newGame(req: CreateRequest): Promise<void> {
    this.state = S.initialState();
    await this.fromServer(() => this.client.createGame(req));
  }

  /** While the pending half belongs to the engine, ask the server to play
   * it.  The loop settles on a human phase or the finished state. */
  private async driveEngine(): Promise<void> {
    while (this.state.phase === "engine_turn" && this.state.view !== null) {
      const view = await this.client.engineMove(this.state.view.id);
      this.emit(S.applyView(this.state, view));
    }
    await this.refreshHint();
  }

  private async refreshHint(): Promise<void> {
    const v = this.state.view;
    if (v === null || !this.state.hintsOn) return;
    if (this.state.phase !== "human_initiation" && this.state.phase !== "human_response")
      return;
    const hint = await this.client.getHint(v.id);
    this.emit(S.applyHint(this.state, hint));
  }

  /** Board click: stages an initiation (no server round-trip yet). */
  clickVertex(v: number): void {
    this.emit(S.clickVertex(this.state, v));
  }

  /** Option-list click: stages a response image by index. */
  pickImage(index: number): void {
    this.emit(S.pickImage(this.state, index));
  }

  hoverImage(image: number[] | null): void {
    this.emit(S.hoverImage(this.state, image));
  }

  async setHints(on: boolean): Promise<void> {
    this.emit(S.setHints(this.state, on));
    await this.refreshHint();
  }

  setLocalFiltering(on: boolean): void {
    this.emit(S.setLocalFiltering(this.state, on));
  }

  /** POST the staged half-move; on success the engine's reply (if it owns
   * the next half) is fetched automatically. */
  async confirm(): Promise<void> {
    const view = this.state.view;
    const body = S.confirmMove(this.state);
    if (view === null || body === null || this.busy) return;
    this.busy = true;
    try {
      await this.fromServer(() => this.client.postMove(view.id, body));
    } finally {
      this.busy = false;
    }
  }

  /** Re-sync with the server (used by tests and after errors). */
  async refresh(): Promise<void> {
    const view = this.state.view;
    if (view === null) return;
    await this.fromServer(() => this.client.getGame(view.id));
  }
}
