import { describe, expect, it } from "vitest";

import { layoutGraph } from "../src/layout.js";
import {
  renderBoard,
  renderError,
  renderHistory,
  renderOptions,
  renderScoreStrip,
} from "../src/render.js";
import * as S from "../src/state.js";
import type { GameView, Hint } from "../src/types.js";
import { mkView } from "./helpers.js";

function boardFor(view: GameView, tweak?: (s: S.UiState) => S.UiState): string {
  let s = S.applyView(S.initialState(), view);
  if (tweak !== undefined) s = tweak(s);
  return renderBoard(s, layoutGraph(view.family, view.n, view.edges));
}

describe("board", () => {
  it("draws one labeled circle per vertex with data-vertex hooks", () => {
    const svg = boardFor(mkView());
    expect(svg.match(/<circle /g)).toHaveLength(4);
    for (let v = 0; v < 4; v++) {
      expect(svg).toContain(`data-vertex="${v}"`);
      expect(svg).toContain(`>${v}</text>`);
    }
  });

  it("marks exactly the server-listed vertices as legal", () => {
    const svg = boardFor(mkView());
    const legal = [...svg.matchAll(/class="([^"]*)" data-vertex="(\d)"/g)]
      .filter((m) => m[1]!.includes("legal"))
      .map((m) => Number(m[2]));
    expect(legal).toEqual([1, 2]);
  });

  it("paints taken vertices with their move number", () => {
    const svg = boardFor(
      mkView({
        available: [3],
        legal_initiations: [],
        status: "finished",
        history: [{ init: 1, image: [0, 1, 2] }],
        moves: 1,
        taken: 3,
        value: 1,
      }),
    );
    for (const v of [0, 1, 2])
      expect(svg).toMatch(
        new RegExp(`class="vertex taken move-1[^"]*" data-vertex="${v}"`),
      );
    expect(svg).toMatch(/class="vertex available[^"]*" data-vertex="3"/);
  });

  it("shows the staged selection and hover highlights", () => {
    const svg = boardFor(mkView(), (s) => S.clickVertex(s, 1));
    expect(svg).toMatch(/class="[^"]*selected[^"]*" data-vertex="1"/);
    const hovered = boardFor(
      mkView({
        status: "awaiting_response",
        human_role: "responder",
        pending_initiation: 1,
        pending_responses: [[0, 1, 2]],
      }),
      (s) => S.hoverImage(s, [0, 1, 2]),
    );
    expect(hovered).toMatch(/class="[^"]*hover-image[^"]*" data-vertex="0"/);
    expect(hovered).toMatch(/class="[^"]*pending[^"]*" data-vertex="1"/);
  });

  it("adds hint badges to live vertices when hints are on", () => {
    const hint: Hint = {
      available: true,
      kind: "initiation",
      options: [
        { vertex: 1, total: 1 },
        { vertex: 2, total: 1 },
      ],
      best: 1,
    };
    const svg = boardFor(mkView(), (s) =>
      S.applyHint(S.setHints(s, true), hint),
    );
    expect(svg).toContain('data-hint-vertex="1"');
    expect(svg).toMatch(/data-hint-vertex="1"[^>]*>1<\/text>/);
    expect(svg).not.toContain('data-hint-vertex="0"');
    const off = boardFor(mkView(), (s) => S.applyHint(s, hint));
    expect(off).not.toContain("data-hint-vertex");
  });
});

describe("response options", () => {
  const respView = mkView({
    status: "awaiting_response",
    human_role: "responder",
    pending_initiation: 1,
    pending_responses: [
      [0, 1, 2],
      [1, 2, 3],
    ],
  });

  it("lists every candidate image with its index", () => {
    const html = renderOptions(S.applyView(S.initialState(), respView));
    expect(html).toContain('data-image-index="0"');
    expect(html).toContain('data-image-index="1"');
    expect(html).toContain("take {0, 1, 2}");
    expect(html).toContain("take {1, 2, 3}");
  });

  it("is empty outside the human response phase", () => {
    expect(renderOptions(S.applyView(S.initialState(), mkView()))).toBe("");
  });

  it("marks picked and hovered images and shows their hint totals", () => {
    const hint: Hint = {
      available: true,
      kind: "response",
      options: [
        { image: [0, 1, 2], total: 2 },
        { image: [1, 2, 3], total: 1 },
      ],
      best: [0, 1, 2],
    };
    let s = S.applyView(S.initialState(), respView);
    s = S.applyHint(S.setHints(s, true), hint);
    s = S.pickImage(s, 1);
    s = S.hoverImage(s, [0, 1, 2]);
    const html = renderOptions(s);
    expect(html).toMatch(/class="image-option hovered" data-image-index="0"/);
    expect(html).toMatch(/class="image-option selected[^"]*" data-image-index="1"/);
    expect(html).toMatch(/data-hint-image="0">2<\/span>/);
    expect(html).toMatch(/data-hint-image="1">1<\/span>/);
  });
});

describe("score strip, errors, history", () => {
  it("shows moves, taken, engine kind, and the final value", () => {
    const live = renderScoreStrip(
      S.applyView(S.initialState(), mkView({ moves: 1, taken: 3 })),
    );
    expect(live).toContain("moves 1");
    expect(live).toContain("taken 3 of 4");
    expect(live).toContain("engine exact");
    expect(live).not.toContain("value");
    const done = renderScoreStrip(
      S.applyView(
        S.initialState(),
        mkView({ status: "finished", moves: 1, taken: 3, value: 1 }),
      ),
    );
    expect(done).toContain("value 1");
  });

  it("escapes server text in inline errors", () => {
    const s = S.applyError(S.initialState(), "<script>alert(1)</script>");
    expect(renderError(s)).not.toContain("<script>");
    expect(renderError(s)).toContain("&lt;script");
    expect(renderError(S.initialState())).toBe("");
  });

  it("renders the move log verbatim", () => {
    const html = renderHistory(
      mkView({
        history: [
          { init: 2, image: [0, 1, 2] },
          { init: 6, image: [4, 5, 6] },
        ],
      }),
    );
    expect(html).toContain("1. init 2");
    expect(html).toContain("take {0, 1, 2}");
    expect(html).toContain("2. init 6");
  });
});
