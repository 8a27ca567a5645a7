// View models for the three hash views. Pure functions over API payloads:
// the server numbers pass through untouched, the client only tracks local
// override edits (dirty = differs from server) and walks server-provided
// edges for the related-concepts listing.

import type {
  ConceptEntry,
  OntologyPayload,
  ReviewChange,
  SearchResult,
} from './api.js';

export type OverrideState = 'accept' | 'reject' | 'unset';

export interface ReviewRow {
  label: string;
  relevance: number;
  frequency: number;
  serverOverride: OverrideState;
  override: OverrideState;
  dirty: boolean;
}

export type SortKey = 'relevance' | 'frequency' | 'label';

function overrideFromValue(value: number | null | undefined): OverrideState {
  if (value === 1 || value === 1.0) return 'accept';
  if (value === 0) return 'reject';
  return 'unset';
}

function overrideToValue(state: OverrideState): number | null {
  if (state === 'accept') return 1.0;
  if (state === 'reject') return 0.0;
  return null;
}

export function rowsFromConcepts(entries: ConceptEntry[]): ReviewRow[] {
  return entries.map((entry) => {
    const server = overrideFromValue(entry.override);
    return {
      label: entry.label,
      relevance: entry.relevance,
      frequency: entry.frequency,
      serverOverride: server,
      override: server,
      dirty: false,
    };
  });
}

export function withOverride(row: ReviewRow, override: OverrideState): ReviewRow {
  return { ...row, override, dirty: override !== row.serverOverride };
}

export function cycleOverride(state: OverrideState): OverrideState {
  if (state === 'unset') return 'accept';
  if (state === 'accept') return 'reject';
  return 'unset';
}

export function dirtyRows(rows: ReviewRow[]): ReviewRow[] {
  return rows.filter((row) => row.dirty);
}

export function toChanges(rows: ReviewRow[]): ReviewChange[] {
  return dirtyRows(rows).map((row) => ({
    label: row.label,
    override: overrideToValue(row.override),
  }));
}

/** After a successful apply the local edits become the server state. */
export function markApplied(rows: ReviewRow[]): ReviewRow[] {
  return rows.map((row) =>
    row.dirty ? { ...row, serverOverride: row.override, dirty: false } : row
  );
}

export function sortRows(rows: ReviewRow[], key: SortKey, descending: boolean): ReviewRow[] {
  const sorted = [...rows].sort((a, b) => {
    let delta: number;
    if (key === 'label') {
      delta = a.label.localeCompare(b.label);
    } else {
      delta = a[key] - b[key];
    }
    if (delta === 0) {
      delta = a.label.localeCompare(b.label);
    }
    return descending ? -delta : delta;
  });
  return sorted;
}

// ---------------------------------------------------------------------------
// ontology browsing

export type Adjacency = Map<string, Set<string>>;

/** Undirected adjacency over the server's relation/subclass/alias edges. */
export function buildAdjacency(payload: OntologyPayload): Adjacency {
  const edges: Adjacency = new Map();
  const link = (a: string, b: string) => {
    if (a === b) return;
    if (!edges.has(a)) edges.set(a, new Set());
    if (!edges.has(b)) edges.set(b, new Set());
    edges.get(a)!.add(b);
    edges.get(b)!.add(a);
  };
  for (const relation of payload.relations) {
    link(relation.domain, relation.range);
  }
  for (const [child, parent] of payload.subclass_edges) {
    link(child, parent);
  }
  for (const concept of payload.concepts) {
    for (const alias of concept.aliases) {
      link(concept.label, alias);
    }
  }
  return edges;
}

export interface RelatedEntry {
  label: string;
  distance: number;
}

export function relatedWithin(
  edges: Adjacency,
  seed: string,
  maxDistance = 2
): RelatedEntry[] {
  const distances = new Map<string, number>([[seed, 0]]);
  let frontier = [seed];
  for (let distance = 1; distance <= maxDistance && frontier.length; distance += 1) {
    const next: string[] = [];
    for (const node of frontier) {
      for (const neighbor of edges.get(node) ?? []) {
        if (!distances.has(neighbor)) {
          distances.set(neighbor, distance);
          next.push(neighbor);
        }
      }
    }
    frontier = next;
  }
  const related = [...distances.entries()]
    .filter(([, distance]) => distance >= 1)
    .map(([label, distance]) => ({ label, distance }));
  related.sort((a, b) => a.distance - b.distance || a.label.localeCompare(b.label));
  return related;
}

// ---------------------------------------------------------------------------
// search view model

export interface ResultRow {
  docId: string;
  title: string;
  score: number;
  matched: { label: string; weight: number }[];
}

export function resultRows(results: SearchResult[]): ResultRow[] {
  return results.map((result) => ({
    docId: result.doc_id,
    title: result.title,
    score: result.score,
    matched: result.matched_concepts.map((m) => ({ label: m.label, weight: m.weight })),
  }));
}

export function formatScore(score: number): string {
  return score.toFixed(4);
}

export function formatRelevance(relevance: number): string {
  return relevance.toFixed(6);
}
