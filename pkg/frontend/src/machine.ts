// Machine diagram: parse the service's DOT text and draw the automaton as
// SVG — states as circles, the accepting state double-circled, labeled
// arrows between them. Anything unparseable falls back to a plain rule
// listing so the learner always sees the machine somehow.

import { escapeHtml } from "./render";

export interface MachineGraph {
  states: { id: string; accepting: boolean }[];
  start: string | null;
  edges: { from: string; to: string; label: string }[];
}

const NODE_LINE = /^\s*"([^"]+)"\s*\[shape=(circle|doublecircle)\];?\s*$/;
const EDGE_LINE = /^\s*"([^"]+)"\s*->\s*"([^"]+)"\s*\[label="([^"]*)"\];?\s*$/;
const START_LINE = /^\s*__start\s*->\s*"([^"]+)";?\s*$/;

export function parseMachineDot(dot: string): MachineGraph {
  const graph: MachineGraph = { states: [], start: null, edges: [] };
  for (const line of dot.split("\n")) {
    const node = NODE_LINE.exec(line);
    if (node) {
      graph.states.push({ id: node[1], accepting: node[2] === "doublecircle" });
      continue;
    }
    const edge = EDGE_LINE.exec(line);
    if (edge) {
      graph.edges.push({ from: edge[1], to: edge[2], label: edge[3] });
      continue;
    }
    const start = START_LINE.exec(line);
    if (start) {
      graph.start = start[1];
    }
  }
  if (!graph.states.length) {
    throw new Error("no states found in machine description");
  }
  return graph;
}

const STEP_X = 120;
const BASE_X = 70;
const BASE_Y = 70;
const RADIUS = 24;

function arrow(x1: number, y1: number, x2: number, y2: number): string {
  return `<line x1="${x1}" y1="${y1}" x2="${x2}" y2="${y2}" class="edge" ` +
    'marker-end="url(#arrowhead)" />';
}

export function renderMachineSvg(graph: MachineGraph): string {
  const index = new Map(graph.states.map((s, i) => [s.id, i]));
  const width = BASE_X + STEP_X * graph.states.length;
  const height = BASE_Y * 2;
  const parts: string[] = [];
  parts.push(
    `<svg class="machine" viewBox="0 0 ${width} ${height}" role="img" ` +
      'xmlns="http://www.w3.org/2000/svg">',
    "<defs><marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"8\" " +
      "refX=\"7\" refY=\"3\" orient=\"auto\">" +
      "<path d=\"M0,0 L7,3 L0,6 z\" class=\"edge-head\" /></marker></defs>",
  );
  if (graph.start !== null && index.has(graph.start)) {
    const x = BASE_X + STEP_X * (index.get(graph.start) as number);
    parts.push(arrow(x - RADIUS - 30, BASE_Y, x - RADIUS - 3, BASE_Y));
  }
  for (const edge of graph.edges) {
    const from = index.get(edge.from);
    const to = index.get(edge.to);
    if (from === undefined || to === undefined) {
      continue;
    }
    const x1 = BASE_X + STEP_X * from;
    const x2 = BASE_X + STEP_X * to;
    if (Math.abs(to - from) === 1) {
      const dir = to > from ? 1 : -1;
      parts.push(arrow(x1 + dir * (RADIUS + 2), BASE_Y, x2 - dir * (RADIUS + 4), BASE_Y));
      parts.push(
        `<text x="${(x1 + x2) / 2}" y="${BASE_Y - 12}" class="edge-label" ` +
          `text-anchor="middle">${escapeHtml(edge.label)}</text>`,
      );
    } else if (to === from) {
      parts.push(
        `<path d="M ${x1 - 10} ${BASE_Y - RADIUS + 4} C ${x1 - 26} ${BASE_Y - RADIUS - 34}, ` +
          `${x1 + 26} ${BASE_Y - RADIUS - 34}, ${x1 + 10} ${BASE_Y - RADIUS + 4}" ` +
          'class="edge" fill="none" marker-end="url(#arrowhead)" />',
        `<text x="${x1}" y="${BASE_Y - RADIUS - 30}" class="edge-label" ` +
          `text-anchor="middle">${escapeHtml(edge.label)}</text>`,
      );
    } else {
      const mid = (x1 + x2) / 2;
      const lift = BASE_Y - RADIUS - 26;
      parts.push(
        `<path d="M ${x1} ${BASE_Y - RADIUS} Q ${mid} ${lift}, ${x2} ${BASE_Y - RADIUS}" ` +
          'class="edge" fill="none" marker-end="url(#arrowhead)" />',
        `<text x="${mid}" y="${lift - 4}" class="edge-label" ` +
          `text-anchor="middle">${escapeHtml(edge.label)}</text>`,
      );
    }
  }
  for (const state of graph.states) {
    const x = BASE_X + STEP_X * (index.get(state.id) as number);
    parts.push(`<circle cx="${x}" cy="${BASE_Y}" r="${RADIUS}" class="state" />`);
    if (state.accepting) {
      parts.push(`<circle cx="${x}" cy="${BASE_Y}" r="${RADIUS - 5}" class="state" />`);
    }
    parts.push(
      `<text x="${x}" y="${BASE_Y + 5}" class="state-label" ` +
        `text-anchor="middle">${escapeHtml(state.id)}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderRuleListing(dot: string): string {
  const rules: string[] = [];
  for (const line of dot.split("\n")) {
    const edge = EDGE_LINE.exec(line);
    if (edge) {
      rules.push(`<li><code>${escapeHtml(`${edge[1]} ${edge[3]} -> ${edge[2]}`)}</code></li>`);
    }
  }
  if (!rules.length) {
    return '<p class="hint">no machine</p>';
  }
  return `<ul class="rules">${rules.join("")}</ul>`;
}

export function renderMachine(dot: string | null): string {
  if (!dot) {
    return '<p class="hint">no machine</p>';
  }
  try {
    return renderMachineSvg(parseMachineDot(dot));
  } catch {
    return renderRuleListing(dot);
  }
}
