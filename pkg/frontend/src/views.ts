// DOM rendering and event wiring for the three hash views. All data
// shown comes from API responses held in the view state.

import { ApiClient, ApiError, type QueryMode } from './api.js';
import {
  buildAdjacency,
  cycleOverride,
  dirtyRows,
  formatRelevance,
  formatScore,
  markApplied,
  relatedWithin,
  resultRows,
  rowsFromConcepts,
  sortRows,
  toChanges,
  withOverride,
  type ReviewRow,
  type ResultRow,
  type SortKey,
} from './state.js';

export interface AppState {
  client: ApiClient;
  user: string;
  rows: ReviewRow[];
  sortKey: SortKey;
  sortDescending: boolean;
  lastLearnConcepts: number | null;
  results: ResultRow[];
  lastQuery: string;
  mode: QueryMode;
  selectedDoc: string | null;
}

export function initialState(client: ApiClient, user = 'console'): AppState {
  return {
    client,
    user,
    rows: [],
    sortKey: 'relevance',
    sortDescending: true,
    lastLearnConcepts: null,
    results: [],
    lastQuery: '',
    mode: 'expand',
    selectedDoc: null,
  };
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

export function toast(message: string, kind: 'info' | 'error' = 'info'): void {
  const host = document.getElementById('toasts');
  if (!host) return;
  const note = el('div', { class: `toast toast-${kind}`, role: 'status' }, message);
  host.appendChild(note);
  setTimeout(() => note.remove(), 4000);
}

function describeError(error: unknown): string {
  if (error instanceof ApiError) {
    return error.status === 409
      ? 'a learn or index run is already in progress; try again shortly'
      : `${error.code}: ${error.message}`;
  }
  return String(error);
}

// ---------------------------------------------------------------------------
// review view

export async function loadReview(state: AppState): Promise<void> {
  const entries = await state.client.listConcepts();
  state.rows = rowsFromConcepts(entries);
}

export function renderReview(container: HTMLElement, state: AppState): void {
  container.textContent = '';
  const heading = el('h2', {}, 'Concept review');
  container.appendChild(heading);

  const controls = el('div', { class: 'controls' });
  const applyButton = el(
    'button',
    { id: 'apply-review', disabled: dirtyRows(state.rows).length ? '' : 'disabled' },
    `Apply (${dirtyRows(state.rows).length})`
  );
  if (!dirtyRows(state.rows).length) {
    applyButton.setAttribute('disabled', 'disabled');
  } else {
    applyButton.removeAttribute('disabled');
  }
  applyButton.addEventListener('click', () => void applyReview(container, state));
  const learnButton = el('button', { id: 'relearn' }, 'Re-learn');
  learnButton.addEventListener('click', () => void relearn(container, state));
  controls.append(applyButton, learnButton);
  if (state.lastLearnConcepts !== null) {
    controls.appendChild(
      el('span', { id: 'learn-summary' }, `ontology concepts: ${state.lastLearnConcepts}`)
    );
  }
  container.appendChild(controls);

  const table = el('table', { id: 'review-table' });
  const head = el('tr');
  const columns: [string, SortKey | null][] = [
    ['label', 'label'],
    ['relevance', 'relevance'],
    ['frequency', 'frequency'],
    ['override', null],
  ];
  for (const [name, key] of columns) {
    const cell = el('th', key ? { class: 'sortable', 'data-sort': key } : {}, name);
    if (key) {
      cell.addEventListener('click', () => {
        if (state.sortKey === key) {
          state.sortDescending = !state.sortDescending;
        } else {
          state.sortKey = key;
          state.sortDescending = key !== 'label';
        }
        renderReview(container, state);
      });
    }
    head.appendChild(cell);
  }
  table.appendChild(head);

  for (const row of sortRows(state.rows, state.sortKey, state.sortDescending)) {
    const tr = el('tr', {
      'data-label': row.label,
      class: row.dirty ? 'dirty' : '',
    });
    tr.appendChild(el('td', {}, row.label));
    tr.appendChild(el('td', {}, formatRelevance(row.relevance)));
    tr.appendChild(el('td', {}, String(row.frequency)));
    const toggle = el(
      'button',
      { class: `override override-${row.override}` },
      row.override
    );
    toggle.addEventListener('click', () => {
      const index = state.rows.findIndex((r) => r.label === row.label);
      state.rows[index] = withOverride(state.rows[index], cycleOverride(row.override));
      renderReview(container, state);
    });
    const cell = el('td');
    cell.appendChild(toggle);
    tr.appendChild(cell);
    table.appendChild(tr);
  }
  container.appendChild(table);
}

async function applyReview(container: HTMLElement, state: AppState): Promise<void> {
  try {
    const outcome = await state.client.applyReview(toChanges(state.rows));
    state.rows = markApplied(state.rows);
    toast(`applied ${outcome.updated} overrides`);
  } catch (error) {
    toast(describeError(error), 'error');
  }
  renderReview(container, state);
}

async function relearn(container: HTMLElement, state: AppState): Promise<void> {
  const before = state.lastLearnConcepts;
  try {
    const summary = await state.client.learn();
    state.lastLearnConcepts = summary.concepts;
    toast(
      before === null
        ? `learned ${summary.concepts} concepts`
        : `concepts: ${before} -> ${summary.concepts}`
    );
    await loadReview(state);
  } catch (error) {
    toast(describeError(error), 'error');
  }
  renderReview(container, state);
}

// ---------------------------------------------------------------------------
// search view

export function renderSearch(container: HTMLElement, state: AppState): void {
  container.textContent = '';
  container.appendChild(el('h2', {}, 'Search'));

  const form = el('form', { id: 'search-form' });
  const box = el('input', { id: 'query', type: 'text', value: state.lastQuery });
  const modes = el('select', { id: 'mode' });
  for (const mode of ['expand', 'trim', 'substitute'] as QueryMode[]) {
    const option = el('option', { value: mode }, mode);
    if (mode === state.mode) option.setAttribute('selected', 'selected');
    modes.appendChild(option);
  }
  const go = el('button', { type: 'submit' }, 'Search');
  form.append(box, modes, go);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    state.lastQuery = (box as HTMLInputElement).value;
    state.mode = (modes as HTMLSelectElement).value as QueryMode;
    void runSearch(container, state);
  });
  container.appendChild(form);

  const list = el('ol', { id: 'results' });
  if (!state.results.length && state.lastQuery) {
    container.appendChild(el('p', { class: 'empty' }, 'no results'));
  }
  for (const result of state.results) {
    const item = el('li', { 'data-doc': result.docId });
    const link = el('a', { href: '#', class: 'result-title' }, result.title);
    link.addEventListener('click', (event) => {
      event.preventDefault();
      void selectResult(container, state, result);
    });
    item.appendChild(link);
    item.appendChild(el('span', { class: 'score' }, ` ${formatScore(result.score)}`));
    const matched = result.matched
      .map((m) => `${m.label}:${m.weight}`)
      .join(', ');
    item.appendChild(el('div', { class: 'matched' }, matched));
    list.appendChild(item);
  }
  container.appendChild(list);

  if (state.selectedDoc) {
    container.appendChild(
      el(
        'p',
        { id: 'selected-doc' },
        `selected ${state.selectedDoc}; its concepts now rank higher for ${state.user}`
      )
    );
  }
}

async function runSearch(container: HTMLElement, state: AppState): Promise<void> {
  if (!state.lastQuery.trim()) return;
  try {
    const results = await state.client.search(state.lastQuery, state.user, state.mode);
    state.results = resultRows(results);
  } catch (error) {
    toast(describeError(error), 'error');
  }
  renderSearch(container, state);
}

async function selectResult(
  container: HTMLElement,
  state: AppState,
  result: ResultRow
): Promise<void> {
  try {
    await state.client.select(state.user, result.docId);
    state.selectedDoc = result.docId;
    const results = await state.client.search(state.lastQuery, state.user, state.mode);
    state.results = resultRows(results);
  } catch (error) {
    toast(describeError(error), 'error');
  }
  renderSearch(container, state);
}

// ---------------------------------------------------------------------------
// ontology view

export async function renderOntology(container: HTMLElement, state: AppState): Promise<void> {
  container.textContent = '';
  container.appendChild(el('h2', {}, 'Ontology'));
  try {
    const payload = await state.client.getOntology();
    if (!payload.concepts.length) {
      container.appendChild(el('p', { class: 'empty' }, 'nothing learned yet'));
      return;
    }
    const edges = buildAdjacency(payload);
    const list = el('ul', { id: 'concepts' });
    for (const concept of payload.concepts) {
      const item = el('li', { 'data-label': concept.label });
      item.appendChild(el('strong', {}, concept.label));
      item.appendChild(
        el('span', { class: 'relevance' }, ` ${formatRelevance(concept.relevance)}`)
      );
      if (concept.aliases.length) {
        item.appendChild(
          el('div', { class: 'aliases' }, `aliases: ${concept.aliases.join(', ')}`)
        );
      }
      const related = relatedWithin(edges, concept.label, 2)
        .map((entry) => `${entry.label} (${entry.distance})`)
        .join(', ');
      if (related) {
        item.appendChild(el('div', { class: 'related' }, `related: ${related}`));
      }
      list.appendChild(item);
    }
    container.appendChild(list);

    const relations = el('ul', { id: 'relations' });
    for (const relation of payload.relations) {
      relations.appendChild(
        el('li', {}, `${relation.label}(${relation.domain}, ${relation.range})`)
      );
    }
    container.appendChild(el('h3', {}, `Relations (${payload.relations.length})`));
    container.appendChild(relations);
  } catch (error) {
    toast(describeError(error), 'error');
  }
}
