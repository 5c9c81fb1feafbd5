import { describe, expect, it } from "vitest";

import * as S from "../src/state.js";
import type { Hint } from "../src/types.js";
import { mkView } from "./helpers.js";

function ready(): S.UiState {
  return S.applyView(S.initialState(), mkView());
}

describe("phases", () => {
  it("starts in setup with no view", () => {
    const s = S.initialState();
    expect(s.phase).toBe("setup");
    expect(s.view).toBeNull();
  });

  it("maps status and seat to the four play phases", () => {
    expect(S.phaseOf(mkView())).toBe("human_initiation");
    expect(S.phaseOf(mkView({ human_role: "responder" }))).toBe("engine_turn");
    expect(
      S.phaseOf(mkView({ status: "awaiting_response", human_role: "responder" })),
    ).toBe("human_response");
    expect(S.phaseOf(mkView({ status: "awaiting_response" }))).toBe(
      "engine_turn",
    );
    expect(S.phaseOf(mkView({ status: "finished" }))).toBe("finished");
  });
});

describe("initiation clicks", () => {
  it("ignores a click on a vertex the server did not list (leaf of the 4-path)", () => {
    const s = ready();
    const after = S.clickVertex(s, 0);
    expect(after.selectedVertex).toBeNull();
    expect(after).toBe(s); // strictly unchanged
  });

  it("stages a server-listed vertex and confirms it as {vertex}", () => {
    const s = S.clickVertex(ready(), 1);
    expect(s.selectedVertex).toBe(1);
    expect(S.confirmMove(s)).toEqual({ vertex: 1 });
  });

  it("restages on a second click", () => {
    const s = S.clickVertex(S.clickVertex(ready(), 1), 2);
    expect(s.selectedVertex).toBe(2);
  });

  it("ignores board clicks when it is not the human's initiation half", () => {
    const engine = S.applyView(
      S.initialState(),
      mkView({ human_role: "responder" }),
    );
    expect(S.clickVertex(engine, 1).selectedVertex).toBeNull();
    const done = S.applyView(S.initialState(), mkView({ status: "finished" }));
    expect(S.clickVertex(done, 1).selectedVertex).toBeNull();
  });

  it("with local filtering stripped, stages anything and leaves the verdict to the server", () => {
    const s = S.clickVertex(S.setLocalFiltering(ready(), false), 0);
    expect(s.selectedVertex).toBe(0);
    expect(S.confirmMove(s)).toEqual({ vertex: 0 });
  });
});

describe("response selection", () => {
  const respView = mkView({
    status: "awaiting_response",
    human_role: "responder",
    pending_initiation: 1,
    pending_responses: [[0, 1, 2]],
  });

  it("stages a listed image by index and confirms it as {image}", () => {
    let s = S.applyView(S.initialState(), respView);
    expect(s.phase).toBe("human_response");
    s = S.pickImage(s, 0);
    expect(s.selectedImage).toBe(0);
    expect(S.confirmMove(s)).toEqual({ image: [0, 1, 2] });
  });

  it("rejects out-of-range indices", () => {
    const s = S.applyView(S.initialState(), respView);
    expect(S.pickImage(s, 1).selectedImage).toBeNull();
    expect(S.pickImage(s, -1).selectedImage).toBeNull();
  });

  it("tracks hovered images for board highlighting", () => {
    let s = S.applyView(S.initialState(), respView);
    s = S.hoverImage(s, [0, 1, 2]);
    expect(s.hoveredImage).toEqual([0, 1, 2]);
    s = S.hoverImage(s, null);
    expect(s.hoveredImage).toBeNull();
  });
});

describe("server authority", () => {
  it("adopting a fresh view clears staging, hints, and errors", () => {
    let s = S.clickVertex(ready(), 1);
    s = S.applyError(s, "nope");
    s = S.applyView(s, mkView({ moves: 1 }));
    expect(s.selectedVertex).toBeNull();
    expect(s.error).toBeNull();
    expect(s.hint).toBeNull();
    expect(s.view?.moves).toBe(1);
  });

  it("a rejected request surfaces inline and leaves the view untouched", () => {
    const s = ready();
    const after = S.applyError(s, "illegal_move: vertex 0 is not legal");
    expect(after.error).toContain("illegal_move");
    expect(after.view).toBe(s.view);
  });
});

describe("hints", () => {
  const initHint: Hint = {
    available: true,
    kind: "initiation",
    options: [
      { vertex: 1, total: 1 },
      { vertex: 2, total: 1 },
    ],
    best: 1,
  };

  it("exposes per-vertex totals only while hints are on", () => {
    let s = S.applyHint(S.setHints(ready(), true), initHint);
    expect(S.hintForVertex(s, 1)).toBe(1);
    expect(S.hintForVertex(s, 0)).toBeNull();
    s = S.setHints(s, false);
    expect(S.hintForVertex(s, 1)).toBeNull();
    expect(s.hint).toBeNull();
  });

  it("matches response hints by image", () => {
    const respHint: Hint = {
      available: true,
      kind: "response",
      options: [{ image: [0, 1, 2], total: 2 }],
      best: [0, 1, 2],
    };
    const s = S.applyHint(S.setHints(ready(), true), respHint);
    expect(S.hintForImage(s, [0, 1, 2])).toBe(2);
    expect(S.hintForImage(s, [2, 3, 4])).toBeNull();
  });

  it("treats an above-cap hint as absent", () => {
    const s = S.applyHint(S.setHints(ready(), true), { available: false });
    expect(S.hintForVertex(s, 1)).toBeNull();
  });
});

describe("replay from the server log", () => {
  const finished = mkView({
    status: "finished",
    family: "path:7",
    n: 7,
    edges: [
      [0, 1],
      [1, 2],
      [2, 3],
      [3, 4],
      [4, 5],
      [5, 6],
    ],
    available: [3],
    legal_initiations: [],
    history: [
      { init: 2, image: [0, 1, 2] },
      { init: 6, image: [4, 5, 6] },
    ],
    moves: 2,
    taken: 6,
    value: 2,
  });

  it("rebuilds every frame and lands exactly on the server's final board", () => {
    const frames = S.replayFrames(finished);
    expect(frames).toHaveLength(3);
    expect(frames[0]!.available).toEqual([0, 1, 2, 3, 4, 5, 6]);
    expect(frames[1]!.takenBy.get(0)).toBe(1);
    expect(frames[1]!.takenBy.get(4)).toBeUndefined();
    expect(frames[2]!.takenBy.get(4)).toBe(2);
    expect(frames[2]!.available).toEqual(finished.available);
    expect(frames[2]!.moveCount).toBe(finished.moves);
  });
});
