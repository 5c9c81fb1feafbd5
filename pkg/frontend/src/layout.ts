/** Vertex positions for the board.
 *
 * Families with natural coordinates (paths, grids, paired rook cliques,
 * complete bipartite, polygon-based outerplanar) are laid out from their
 * parameters, mirroring the server's row-major vertex numbering.  Trees and
 * forests get a layered layout rooted at a leaf.  Everything else falls back
 * to a force-directed embedding with a fixed seed, so identical inputs give
 * identical pictures.  Positions are normalized to the unit square; this is
 * presentation only — no game rule lives here.
 */

export interface Point {
  x: number;
  y: number;
}

type Edge = [number, number];

// -- deterministic PRNG for the force fallback ------------------------------

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

// -- helpers -----------------------------------------------------------------

function normalize(points: Point[]): Point[] {
  if (points.length === 0) return points;
  if (points.length === 1) return [{ x: 0.5, y: 0.5 }];
  const xs = points.map((p) => p.x);
  const ys = points.map((p) => p.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  return points.map((p) => ({
    x: (p.x - minX) / spanX,
    y: (p.y - minY) / spanY,
  }));
}

function adjacency(n: number, edges: Edge[]): number[][] {
  const adj: number[][] = Array.from({ length: n }, () => []);
  for (const [u, v] of edges) {
    adj[u]!.push(v);
    adj[v]!.push(u);
  }
  return adj;
}

function isForest(n: number, edges: Edge[]): boolean {
  // a forest has m = n - (number of components) and no cycle; detect by
  // union-find: any edge joining two already-connected vertices is a cycle
  const parent = Array.from({ length: n }, (_, i) => i);
  const find = (x: number): number => {
    while (parent[x]! !== x) {
      parent[x] = parent[parent[x]!]!;
      x = parent[x]!;
    }
    return x;
  };
  for (const [u, v] of edges) {
    const ru = find(u);
    const rv = find(v);
    if (ru === rv) return false;
    parent[ru] = rv;
  }
  return true;
}

// -- named layouts -----------------------------------------------------------

function lineLayout(n: number): Point[] {
  return Array.from({ length: n }, (_, i) => ({ x: i, y: 0 }));
}

function latticeLayout(rows: number, cols: number, gap = 0): Point[] {
  // row-major ids, matching the server's numbering
  const pts: Point[] = [];
  for (let r = 0; r < rows; r++)
    for (let c = 0; c < cols; c++)
      pts.push({ x: c, y: r * (1 + gap) });
  return pts;
}

function bipartiteLayout(r: number, s: number): Point[] {
  const pts: Point[] = [];
  const tall = Math.max(r, s) - 1 || 1;
  for (let i = 0; i < r; i++)
    pts.push({ x: 0, y: (i * tall) / Math.max(r - 1, 1) });
  for (let j = 0; j < s; j++)
    pts.push({ x: 1, y: (j * tall) / Math.max(s - 1, 1) });
  return pts;
}

function polygonLayout(n: number): Point[] {
  return Array.from({ length: n }, (_, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    return { x: Math.cos(angle), y: Math.sin(angle) };
  });
}

/** Layered layout for forests: each tree is rooted at its lowest-id leaf,
 * layers go left to right, vertices in a layer spread vertically; trees
 * stack below one another. */
function layeredForestLayout(n: number, edges: Edge[]): Point[] {
  const adj = adjacency(n, edges);
  const pts: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
  const seen = new Array<boolean>(n).fill(false);
  let yBase = 0;
  for (let start = 0; start < n; start++) {
    if (seen[start]) continue;
    // collect the component
    const comp: number[] = [];
    const stack = [start];
    seen[start] = true;
    while (stack.length > 0) {
      const v = stack.pop()!;
      comp.push(v);
      for (const w of adj[v]!)
        if (!seen[w]) {
          seen[w] = true;
          stack.push(w);
        }
    }
    // root at the lowest-id leaf (degree <= 1 within the component)
    comp.sort((a, b) => a - b);
    const root = comp.find((v) => adj[v]!.length <= 1) ?? comp[0]!;
    // BFS layers
    const layer = new Map<number, number>([[root, 0]]);
    const order: number[] = [root];
    for (let i = 0; i < order.length; i++) {
      const v = order[i]!;
      for (const w of adj[v]!)
        if (!layer.has(w)) {
          layer.set(w, layer.get(v)! + 1);
          order.push(w);
        }
    }
    const byLayer = new Map<number, number[]>();
    for (const v of comp) {
      const l = layer.get(v)!;
      const bucket = byLayer.get(l) ?? [];
      bucket.push(v);
      byLayer.set(l, bucket);
    }
    let height = 0;
    for (const [l, bucket] of byLayer) {
      bucket.sort((a, b) => a - b);
      bucket.forEach((v, i) => {
        pts[v] = { x: l, y: yBase + i };
      });
      height = Math.max(height, bucket.length);
    }
    yBase += height + 1;
  }
  return pts;
}

function forceLayout(n: number, edges: Edge[]): Point[] {
  const rand = mulberry32(0x5eed);
  const pts = polygonLayout(n).map((p) => ({
    x: p.x + (rand() - 0.5) * 0.1,
    y: p.y + (rand() - 0.5) * 0.1,
  }));
  const k = 1.2 / Math.sqrt(Math.max(n, 1));
  for (let iter = 0; iter < 150; iter++) {
    const disp: Point[] = Array.from({ length: n }, () => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++)
      for (let j = i + 1; j < n; j++) {
        let dx = pts[i]!.x - pts[j]!.x;
        let dy = pts[i]!.y - pts[j]!.y;
        let d = Math.hypot(dx, dy);
        if (d < 1e-9) {
          dx = 1e-4 * (i - j);
          dy = 1e-4;
          d = Math.hypot(dx, dy);
        }
        const f = (k * k) / d;
        disp[i]!.x += (dx / d) * f;
        disp[i]!.y += (dy / d) * f;
        disp[j]!.x -= (dx / d) * f;
        disp[j]!.y -= (dy / d) * f;
      }
    for (const [u, v] of edges) {
      const dx = pts[u]!.x - pts[v]!.x;
      const dy = pts[u]!.y - pts[v]!.y;
      const d = Math.hypot(dx, dy) || 1e-9;
      const f = (d * d) / k;
      disp[u]!.x -= (dx / d) * f;
      disp[u]!.y -= (dy / d) * f;
      disp[v]!.x += (dx / d) * f;
      disp[v]!.y += (dy / d) * f;
    }
    const temp = 0.1 * (1 - iter / 150);
    for (let i = 0; i < n; i++) {
      const d = Math.hypot(disp[i]!.x, disp[i]!.y) || 1e-9;
      const step = Math.min(d, temp);
      pts[i]!.x += (disp[i]!.x / d) * step;
      pts[i]!.y += (disp[i]!.y / d) * step;
    }
  }
  return pts;
}

// -- family-string dispatch --------------------------------------------------

function parseFamily(family: string): { name: string; arg: string } {
  const idx = family.indexOf(":");
  if (idx < 0) return { name: family.trim(), arg: "" };
  return {
    name: family.slice(0, idx).trim().toLowerCase(),
    arg: family.slice(idx + 1).trim(),
  };
}

function gridDims(arg: string): { rows: number; cols: number } | null {
  const m = /^(\d+)x(\d+)$/i.exec(arg);
  if (!m) return null;
  return { rows: Number(m[1]), cols: Number(m[2]) };
}

/** Positions for every vertex id, in the unit square. */
export function layoutGraph(
  family: string | null,
  n: number,
  edges: Edge[],
): Point[] {
  if (n === 0) return [];
  if (family !== null) {
    const { name, arg } = parseFamily(family);
    if (name === "path") return normalize(lineLayout(n));
    if (name === "grid") {
      const d = gridDims(arg);
      if (d && d.rows * d.cols === n)
        return normalize(latticeLayout(d.rows, d.cols));
    }
    if (name === "rooks2") {
      const m = Number(arg);
      if (Number.isInteger(m) && 2 * m === n)
        return normalize(latticeLayout(2, m, 0.6));
    }
    if (name === "complete_bipartite" || name === "kbip") {
      const d = gridDims(arg);
      if (d && d.rows + d.cols === n)
        return normalize(bipartiteLayout(d.rows, d.cols));
    }
    if (name === "mop") return normalize(polygonLayout(n));
  }
  if (isForest(n, edges)) return normalize(layeredForestLayout(n, edges));
  return normalize(forceLayout(n, edges));
}
