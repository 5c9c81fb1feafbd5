import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { jsonResponse, mkView } from "./helpers.js";

interface Recorded {
  url: string;
  init?: RequestInit;
}

function recordingClient(
  replies: Response[],
): { client: ApiClient; calls: Recorded[] } {
  const calls: Recorded[] = [];
  const client = new ApiClient("http://example.test/", (url, init) => {
    calls.push({ url, init });
    const next = replies.shift();
    if (next === undefined) throw new Error("unexpected request");
    return Promise.resolve(next);
  });
  return { client, calls };
}

describe("ApiClient", () => {
  it("POSTs /games with the create body and parses the view", async () => {
    const view = mkView();
    const { client, calls } = recordingClient([jsonResponse(view, 201)]);
    const got = await client.createGame({
      pattern: "star",
      initiator: "min",
      human_role: "initiator",
      family: "path:4",
    });
    expect(got.id).toBe("t1");
    expect(got.legal_initiations).toEqual([1, 2]);
    expect(calls).toHaveLength(1);
    expect(calls[0]!.url).toBe("http://example.test/games");
    expect(calls[0]!.init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0]!.init?.body))).toEqual({
      pattern: "star",
      initiator: "min",
      human_role: "initiator",
      family: "path:4",
    });
  });

  it("strips trailing slashes from the base URL", async () => {
    const { client, calls } = recordingClient([jsonResponse(mkView())]);
    await client.getGame("abc");
    expect(calls[0]!.url).toBe("http://example.test/games/abc");
  });

  it("builds the options query string", async () => {
    const { client, calls } = recordingClient([
      jsonResponse({ vertex: 2, images: [[1, 2, 3]] }),
    ]);
    const got = await client.getOptions("abc", 2);
    expect(calls[0]!.url).toBe("http://example.test/games/abc/options?vertex=2");
    expect(got.images).toEqual([[1, 2, 3]]);
  });

  it("POSTs half-moves and engine moves to their routes", async () => {
    const { client, calls } = recordingClient([
      jsonResponse(mkView({ status: "awaiting_response" })),
      jsonResponse(mkView({ status: "finished" })),
    ]);
    await client.postMove("abc", { vertex: 1 });
    await client.engineMove("abc");
    expect(calls[0]!.url).toBe("http://example.test/games/abc/move");
    expect(JSON.parse(String(calls[0]!.init?.body))).toEqual({ vertex: 1 });
    expect(calls[1]!.url).toBe("http://example.test/games/abc/engine-move");
  });

  it("maps structured error replies to ApiError", async () => {
    const { client } = recordingClient([
      jsonResponse({ error: "illegal_move", detail: "vertex 0 is not legal" }, 422),
    ]);
    const err = await client.postMove("abc", { vertex: 0 }).catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("illegal_move");
    expect(err.detail).toBe("vertex 0 is not legal");
    expect(err.status).toBe(422);
  });

  it("keeps a generic code when the error body is not JSON", async () => {
    const { client } = recordingClient([
      new Response("boom", { status: 500 }),
    ]);
    const err = await client.getGame("abc").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("http_error");
    expect(err.status).toBe(500);
  });

  it("passes the unavailable-hint payload through", async () => {
    const { client } = recordingClient([jsonResponse({ available: false })]);
    const hint = await client.getHint("abc");
    expect(hint).toEqual({ available: false });
  });

  it("rejects malformed view payloads loudly", async () => {
    const { client } = recordingClient([jsonResponse({ id: 42 })]);
    await expect(client.getGame("abc")).rejects.toThrow(/malformed/);
  });
});
