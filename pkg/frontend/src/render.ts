/** Pure view -> markup rendering.  Everything returns strings so it can be
 * tested without a DOM; main.ts mounts the strings and delegates events.
 * Board classes mirror the latest server view only — a vertex is marked
 * `legal` exactly when the server listed it, never by local deduction. */

import type { Point } from "./layout.js";
import type { UiState } from "./state.js";
import { hintForImage, hintForVertex, replayFrames } from "./state.js";
import type { GameView } from "./types.js";
import { sameImage } from "./types.js";

export const BOARD_SIZE = 520;
const PAD = 40;

function sx(p: Point): number {
  return PAD + p.x * (BOARD_SIZE - 2 * PAD);
}

function sy(p: Point): number {
  return PAD + p.y * (BOARD_SIZE - 2 * PAD);
}

export function takenByMove(view: GameView): Map<number, number> {
  const frames = replayFrames(view);
  return frames[frames.length - 1]!.takenBy;
}

/** SVG for the board.  `points` must have one entry per vertex id. */
export function renderBoard(
  state: UiState,
  points: Point[],
): string {
  const view = state.view;
  if (view === null) return `<svg class="board" width="${BOARD_SIZE}" height="${BOARD_SIZE}"></svg>`;
  const taken = takenByMove(view);
  const legal = new Set(view.legal_initiations);
  const pending = new Set(
    view.pending_initiation === null ? [] : [view.pending_initiation],
  );
  const hover = new Set(state.hoveredImage ?? []);
  const staged =
    state.selectedImage !== null
      ? new Set(view.pending_responses[state.selectedImage] ?? [])
      : new Set<number>();

  const parts: string[] = [
    `<svg class="board" width="${BOARD_SIZE}" height="${BOARD_SIZE}" viewBox="0 0 ${BOARD_SIZE} ${BOARD_SIZE}">`,
  ];
  for (const [u, v] of view.edges) {
    const gone = taken.has(u) || taken.has(v);
    parts.push(
      `<line class="edge${gone ? " gone" : ""}" x1="${sx(points[u]!)}" y1="${sy(
        points[u]!,
      )}" x2="${sx(points[v]!)}" y2="${sy(points[v]!)}"/>`,
    );
  }
  for (let v = 0; v < view.n; v++) {
    const classes = ["vertex"];
    const k = taken.get(v);
    if (k !== undefined) classes.push("taken", `move-${k}`);
    else classes.push("available");
    if (legal.has(v)) classes.push("legal");
    if (state.selectedVertex === v) classes.push("selected");
    if (pending.has(v)) classes.push("pending");
    if (hover.has(v)) classes.push("hover-image");
    if (staged.has(v)) classes.push("staged-image");
    parts.push(
      `<circle class="${classes.join(" ")}" data-vertex="${v}" cx="${sx(
        points[v]!,
      )}" cy="${sy(points[v]!)}" r="14"/>`,
    );
    parts.push(
      `<text class="vertex-label" x="${sx(points[v]!)}" y="${
        sy(points[v]!) + 4
      }" text-anchor="middle">${v}</text>`,
    );
    const badge = hintForVertex(state, v);
    if (badge !== null && k === undefined) {
      parts.push(
        `<text class="hint-badge" data-hint-vertex="${v}" x="${
          sx(points[v]!) + 16
        }" y="${sy(points[v]!) - 12}">${badge}</text>`,
      );
    }
  }
  parts.push("</svg>");
  return parts.join("");
}

/** The candidate response images for the pending initiation, as a list. */
export function renderOptions(state: UiState): string {
  const view = state.view;
  if (view === null || state.phase !== "human_response") return "";
  const items = view.pending_responses
    .map((image, i) => {
      const classes = ["image-option"];
      if (state.selectedImage === i) classes.push("selected");
      if (state.hoveredImage !== null && sameImage(state.hoveredImage, image))
        classes.push("hovered");
      const badge = hintForImage(state, image);
      const badgeHtml =
        badge === null
          ? ""
          : `<span class="hint-badge" data-hint-image="${i}">${badge}</span>`;
      return `<li class="${classes.join(" ")}" data-image-index="${i}">take {${image.join(
        ", ",
      )}}${badgeHtml}</li>`;
    })
    .join("");
  return `<ul class="image-options">${items}</ul>`;
}

/** Moves so far, vertices taken, whose half is pending, final value. */
export function renderScoreStrip(state: UiState): string {
  const view = state.view;
  if (view === null) return `<div class="strip">no session</div>`;
  const bits = [
    `<span class="moves">moves ${view.moves}</span>`,
    `<span class="taken">taken ${view.taken} of ${view.n}</span>`,
    `<span class="engine">engine ${view.engine}</span>`,
    `<span class="phase">${state.phase.replace("_", " ")}</span>`,
  ];
  if (view.status === "finished")
    bits.push(`<span class="value">value ${view.value}</span>`);
  return `<div class="strip">${bits.join(" · ")}</div>`;
}

export function renderError(state: UiState): string {
  if (state.error === null) return "";
  return `<div class="error" role="alert">${state.error
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")}</div>`;
}

/** History as played, one line per full move — rendering the server log. */
export function renderHistory(view: GameView): string {
  const rows = view.history
    .map(
      (mv, i) =>
        `<li class="move-row">${i + 1}. init ${mv.init} &rarr; take {${mv.image.join(
          ", ",
        )}}</li>`,
    )
    .join("");
  return `<ol class="history">${rows}</ol>`;
}
