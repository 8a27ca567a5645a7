// Typed client for the ontoforge HTTP/JSON API. Every view reads its
// numbers from these responses; nothing is computed client-side beyond
// presentation.

export interface ConceptEntry {
  label: string;
  kind: string;
  relevance: number;
  frequency: number;
  override: number | null;
}

export interface ReviewChange {
  label: string;
  override: number | null;
}

export interface ReviewOutcome {
  updated: number;
  total: number;
}

export interface LearnSummary {
  concepts: number;
  relations: number;
}

export interface IndexSummary {
  documents: number;
  concepts_with_documents: number;
}

export interface OntologyConcept {
  label: string;
  relevance: number;
  aliases: string[];
}

export interface OntologyRelation {
  label: string;
  domain: string;
  range: string;
  confidence: number;
}

export interface OntologyPayload {
  concepts: OntologyConcept[];
  relations: OntologyRelation[];
  subclass_edges: [string, string][];
}

export interface MatchedConcept {
  label: string;
  weight: number;
}

export interface SearchResult {
  doc_id: string;
  title: string;
  score: number;
  matched_concepts: MatchedConcept[];
}

export interface SelectOutcome {
  user: string;
  ratings: Record<string, number>;
}

export type QueryMode = 'expand' | 'trim' | 'substitute';

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

async function toApiError(response: Response): Promise<ApiError> {
  let code = 'unknown';
  let message = `HTTP ${response.status}`;
  try {
    const body = (await response.json()) as { code?: string; message?: string };
    if (body.code) code = body.code;
    if (body.message) message = body.message;
  } catch {
    // non-JSON error body; keep defaults
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  constructor(private readonly base: string = '') {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, init);
    if (!response.ok) {
      throw await toApiError(response);
    }
    return (await response.json()) as T;
  }

  listConcepts(minRelevance = 0): Promise<ConceptEntry[]> {
    const query = minRelevance > 0 ? `?min_relevance=${minRelevance}` : '';
    return this.request<ConceptEntry[]>(`/api/concepts${query}`);
  }

  applyReview(changes: ReviewChange[]): Promise<ReviewOutcome> {
    return this.request<ReviewOutcome>('/api/concepts/review', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(changes),
    });
  }

  learn(): Promise<LearnSummary> {
    return this.request<LearnSummary>('/api/learn', { method: 'POST' });
  }

  buildIndex(): Promise<IndexSummary> {
    return this.request<IndexSummary>('/api/index', { method: 'POST' });
  }

  getOntology(): Promise<OntologyPayload> {
    return this.request<OntologyPayload>('/api/ontology');
  }

  search(q: string, user: string, mode: QueryMode): Promise<SearchResult[]> {
    const params = new URLSearchParams({ q, user, mode });
    return this.request<SearchResult[]>(`/api/search?${params.toString()}`);
  }

  select(user: string, docId: string): Promise<SelectOutcome> {
    return this.request<SelectOutcome>('/api/select', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ user, doc_id: docId }),
    });
  }
}
