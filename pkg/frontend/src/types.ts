/** Server JSON contracts, mirrored exactly; the client adds nothing. */

export type Status = "awaiting_initiation" | "awaiting_response" | "finished";
export type Role = "initiator" | "responder";
export type PatternKind = "star" | "stripe" | "unrooted";
export type Player = "max" | "min";

export interface MoveRecord {
  init: number;
  image: number[];
}

export interface GameView {
  id: string;
  status: Status;
  spec: { pattern: PatternKind; initiator: Player };
  family: string | null;
  n: number;
  edges: [number, number][];
  human_role: Role;
  engine: "exact" | "greedy";
  available: number[];
  legal_initiations: number[];
  pending_initiation: number | null;
  pending_responses: number[][];
  history: MoveRecord[];
  moves: number;
  taken: number;
  value: number | null;
  created: number;
  updated: number;
}

export interface CreateRequest {
  pattern: PatternKind;
  initiator: Player;
  human_role: Role;
  family?: string;
  graph?: { n: number; edges: [number, number][] };
}

export type MoveBody = { vertex: number } | { image: number[] };

export interface OptionsReply {
  vertex: number;
  images: number[][];
}

export interface InitiationHintOption {
  vertex: number;
  total: number;
}

export interface ResponseHintOption {
  image: number[];
  total: number;
}

export type Hint =
  | { available: false }
  | {
      available: true;
      kind: "initiation";
      options: InitiationHintOption[];
      best: number;
    }
  | {
      available: true;
      kind: "response";
      options: ResponseHintOption[];
      best: number[];
    };

/** Shape errors are bugs (ours or the server's), not user mistakes. */
export class ShapeError extends Error {}

function bad(what: string): never {
  throw new ShapeError(`malformed server payload: ${what}`);
}

function isIntArray(x: unknown): x is number[] {
  return Array.isArray(x) && x.every((v) => Number.isInteger(v));
}

export function asGameView(x: unknown): GameView {
  if (typeof x !== "object" || x === null) bad("view is not an object");
  const v = x as Record<string, unknown>;
  if (typeof v.id !== "string") bad("id");
  if (
    v.status !== "awaiting_initiation" &&
    v.status !== "awaiting_response" &&
    v.status !== "finished"
  )
    bad("status");
  if (!Number.isInteger(v.n)) bad("n");
  if (!Array.isArray(v.edges)) bad("edges");
  if (!isIntArray(v.available)) bad("available");
  if (!isIntArray(v.legal_initiations)) bad("legal_initiations");
  if (v.pending_initiation !== null && !Number.isInteger(v.pending_initiation))
    bad("pending_initiation");
  if (
    !Array.isArray(v.pending_responses) ||
    !v.pending_responses.every(isIntArray)
  )
    bad("pending_responses");
  if (!Array.isArray(v.history)) bad("history");
  if (v.human_role !== "initiator" && v.human_role !== "responder")
    bad("human_role");
  return x as GameView;
}

export function asHint(x: unknown): Hint {
  if (typeof x !== "object" || x === null) bad("hint is not an object");
  const h = x as Record<string, unknown>;
  if (h.available === false) return { available: false };
  if (h.available !== true || !Array.isArray(h.options)) bad("hint");
  return x as Hint;
}

export function asOptions(x: unknown): OptionsReply {
  if (typeof x !== "object" || x === null) bad("options is not an object");
  const o = x as Record<string, unknown>;
  if (!Number.isInteger(o.vertex)) bad("options.vertex");
  if (!Array.isArray(o.images) || !o.images.every(isIntArray))
    bad("options.images");
  return x as OptionsReply;
}

export function sameImage(a: number[], b: number[]): boolean {
  return a.length === b.length && a.every((v, i) => v === b[i]);
}
