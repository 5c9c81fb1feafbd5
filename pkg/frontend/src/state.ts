/** The UI state machine.
 *
 * Pure data and transitions; no DOM, no network.  The server view is the
 * only source of truth: this module stages the human's next half-move and
 * mirrors the latest view, it never computes legality itself.  The
 * `localFiltering` switch exists so a test can strip the client-side
 * pre-check and demonstrate that behaviour is unchanged — the server is the
 * referee either way.
 */

import type { GameView, Hint, MoveBody } from "./types.js";
import { sameImage } from "./types.js";

export type Phase =
  | "setup"
  | "human_initiation"
  | "human_response"
  | "engine_turn"
  | "finished";

export interface UiState {
  view: GameView | null;
  phase: Phase;
  /** staged initiation choice (vertex id), awaiting confirm */
  selectedVertex: number | null;
  /** staged response choice: index into view.pending_responses */
  selectedImage: number | null;
  /** image currently hovered in the option list (for board highlighting) */
  hoveredImage: number[] | null;
  hintsOn: boolean;
  /** latest hint payload for the current decision, if fetched */
  hint: Hint | null;
  /** inline server error from the last rejected request */
  error: string | null;
  /** when false, clicks are staged without the client-side legality mirror */
  localFiltering: boolean;
}

export function initialState(): UiState {
  return {
    view: null,
    phase: "setup",
    selectedVertex: null,
    selectedImage: null,
    hoveredImage: null,
    hintsOn: false,
    hint: null,
    error: null,
    localFiltering: true,
  };
}

/** Whose half-move is pending, from the server's status and seat fields. */
export function phaseOf(view: GameView): Phase {
  if (view.status === "finished") return "finished";
  const humanHalf =
    view.status === "awaiting_initiation"
      ? view.human_role === "initiator"
      : view.human_role === "responder";
  return humanHalf
    ? view.status === "awaiting_initiation"
      ? "human_initiation"
      : "human_response"
    : "engine_turn";
}

/** Adopt a fresh server view; all staging and stale hints are dropped. */
export function applyView(state: UiState, view: GameView): UiState {
  return {
    ...state,
    view,
    phase: phaseOf(view),
    selectedVertex: null,
    selectedImage: null,
    hoveredImage: null,
    hint: null,
    error: null,
  };
}

/** Surface a rejected request; the view (and thus the board) is unchanged. */
export function applyError(state: UiState, message: string): UiState {
  return { ...state, error: message };
}

export function applyHint(state: UiState, hint: Hint): UiState {
  return { ...state, hint };
}

export function setHints(state: UiState, on: boolean): UiState {
  return { ...state, hintsOn: on, hint: on ? state.hint : null };
}

export function setLocalFiltering(state: UiState, on: boolean): UiState {
  return { ...state, localFiltering: on };
}

/** A board click.  Stages an initiation when it is the human's initiation
 * half; out-of-turn clicks are ignored.  With `localFiltering` the staged
 * vertex must appear in the server's `legal_initiations` mirror; without
 * it, anything available is staged and the server gets the final say. */
export function clickVertex(state: UiState, v: number): UiState {
  if (state.phase !== "human_initiation" || state.view === null) return state;
  if (state.localFiltering && !state.view.legal_initiations.includes(v))
    return state;
  if (!state.view.available.includes(v) && state.localFiltering) return state;
  return { ...state, selectedVertex: v, error: null };
}

/** Pick a response image from the listed candidates (by list index). */
export function pickImage(state: UiState, index: number): UiState {
  if (state.phase !== "human_response" || state.view === null) return state;
  if (index < 0 || index >= state.view.pending_responses.length) return state;
  return { ...state, selectedImage: index, error: null };
}

export function hoverImage(state: UiState, image: number[] | null): UiState {
  return { ...state, hoveredImage: image };
}

/** The move body to POST for the staged selection, or null if nothing is
 * staged for the current phase. */
export function confirmMove(state: UiState): MoveBody | null {
  if (state.view === null) return null;
  if (state.phase === "human_initiation" && state.selectedVertex !== null)
    return { vertex: state.selectedVertex };
  if (state.phase === "human_response" && state.selectedImage !== null) {
    const image = state.view.pending_responses[state.selectedImage];
    if (image !== undefined) return { image };
  }
  return null;
}

/** The hint total for a legal initiation vertex, if hints are on and the
 * current hint payload covers it. */
export function hintForVertex(state: UiState, v: number): number | null {
  if (!state.hintsOn || state.hint === null || !state.hint.available)
    return null;
  if (state.hint.kind !== "initiation") return null;
  const opt = state.hint.options.find((o) => o.vertex === v);
  return opt === undefined ? null : opt.total;
}

/** The hint total for a candidate response image, if available. */
export function hintForImage(state: UiState, image: number[]): number | null {
  if (!state.hintsOn || state.hint === null || !state.hint.available)
    return null;
  if (state.hint.kind !== "response") return null;
  const opt = state.hint.options.find((o) => sameImage(o.image, image));
  return opt === undefined ? null : opt.total;
}

// ---------------------------------------------------------------------------
// replay: re-derive every board frame of a session from the server history
// ---------------------------------------------------------------------------

export interface Frame {
  /** full moves applied so far */
  moveCount: number;
  /** vertex id -> 1-based move number that took it */
  takenBy: Map<number, number>;
  available: number[];
}

/** The sequence of board frames a finished (or running) session went
 * through, rebuilt purely from the server's move log. */
export function replayFrames(view: GameView): Frame[] {
  const frames: Frame[] = [];
  const takenBy = new Map<number, number>();
  const frame = (count: number): Frame => ({
    moveCount: count,
    takenBy: new Map(takenBy),
    available: Array.from({ length: view.n }, (_, i) => i).filter(
      (v) => !takenBy.has(v),
    ),
  });
  frames.push(frame(0));
  view.history.forEach((mv, k) => {
    for (const v of mv.image) takenBy.set(v, k + 1);
    frames.push(frame(k + 1));
  });
  return frames;
}
