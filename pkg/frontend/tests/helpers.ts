import type { GameView } from "../src/types.js";

/** A 4-path, star pattern, Minimizer initiating, human in the initiator
 * seat — the server would list exactly the two interior vertices. */
export function mkView(partial: Partial<GameView> = {}): GameView {
  return {
    id: "t1",
    status: "awaiting_initiation",
    spec: { pattern: "star", initiator: "min" },
    family: "path:4",
    n: 4,
    edges: [
      [0, 1],
      [1, 2],
      [2, 3],
    ],
    human_role: "initiator",
    engine: "exact",
    available: [0, 1, 2, 3],
    legal_initiations: [1, 2],
    pending_initiation: null,
    pending_responses: [],
    history: [],
    moves: 0,
    taken: 0,
    value: null,
    created: 0,
    updated: 0,
    ...partial,
  };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
