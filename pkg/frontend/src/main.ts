/** Browser bootstrap: mounts the form, board, option list, and score strip,
 * and forwards DOM events to the controller.  All markup comes from the
 * pure render functions; all game data comes from the server. */

import { ApiClient } from "./api.js";
import { Controller } from "./controller.js";
import { layoutGraph, type Point } from "./layout.js";
import {
  renderBoard,
  renderError,
  renderHistory,
  renderOptions,
  renderScoreStrip,
} from "./render.js";
import type { UiState } from "./state.js";
import type { CreateRequest, PatternKind, Player, Role } from "./types.js";

const BASE_KEY = "matchgame-base-url";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

function readForm(): CreateRequest {
  return {
    family: el<HTMLInputElement>("family").value.trim(),
    pattern: el<HTMLSelectElement>("pattern").value as PatternKind,
    initiator: el<HTMLSelectElement>("initiator").value as Player,
    human_role: el<HTMLSelectElement>("seat").value as Role,
  };
}

function main(): void {
  const baseInput = el<HTMLInputElement>("base-url");
  let stored: string | null = null;
  try {
    stored = localStorage.getItem(BASE_KEY);
  } catch {
    // storage unavailable: fall through to the default
  }
  baseInput.value = stored ?? "http://127.0.0.1:8765";

  let controller = new Controller(new ApiClient(baseInput.value));
  let points: Point[] = [];
  let layoutKey = "";

  const board = el<HTMLDivElement>("board");
  const options = el<HTMLDivElement>("options");
  const strip = el<HTMLDivElement>("strip");
  const errorBox = el<HTMLDivElement>("error");
  const historyBox = el<HTMLDivElement>("history");

  const render = (state: UiState): void => {
    const view = state.view;
    if (view !== null) {
      const key = `${view.id}:${view.n}`;
      if (key !== layoutKey) {
        points = layoutGraph(view.family, view.n, view.edges);
        layoutKey = key;
      }
      board.innerHTML = renderBoard(state, points);
      historyBox.innerHTML = renderHistory(view);
    } else {
      board.innerHTML = "";
      historyBox.innerHTML = "";
    }
    options.innerHTML = renderOptions(state);
    strip.innerHTML = renderScoreStrip(state);
    errorBox.innerHTML = renderError(state);
    el<HTMLButtonElement>("confirm").disabled =
      state.selectedVertex === null && state.selectedImage === null;
  };

  const attach = (): void => controller.subscribe(render);
  attach();

  baseInput.addEventListener("change", () => {
    try {
      localStorage.setItem(BASE_KEY, baseInput.value);
    } catch {
      // best effort only
    }
    controller = new Controller(new ApiClient(baseInput.value));
    attach();
  });

  el<HTMLButtonElement>("new-game").addEventListener("click", () => {
    void controller.newGame(readForm());
  });

  el<HTMLButtonElement>("confirm").addEventListener("click", () => {
    void controller.confirm();
  });

  el<HTMLInputElement>("hints").addEventListener("change", (ev) => {
    void controller.setHints((ev.target as HTMLInputElement).checked);
  });

  board.addEventListener("click", (ev) => {
    const target = (ev.target as Element).closest("[data-vertex]");
    if (target === null) return;
    controller.clickVertex(Number(target.getAttribute("data-vertex")));
  });

  options.addEventListener("click", (ev) => {
    const target = (ev.target as Element).closest("[data-image-index]");
    if (target === null) return;
    controller.pickImage(Number(target.getAttribute("data-image-index")));
  });

  options.addEventListener("mouseover", (ev) => {
    const target = (ev.target as Element).closest("[data-image-index]");
    if (target === null) return;
    const idx = Number(target.getAttribute("data-image-index"));
    const image = controller.current().view?.pending_responses[idx] ?? null;
    controller.hoverImage(image);
  });

  options.addEventListener("mouseout", () => controller.hoverImage(null));
}

document.addEventListener("DOMContentLoaded", main);
