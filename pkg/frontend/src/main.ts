import { ApiClient } from './api.js';
import {
  initialState,
  loadReview,
  renderOntology,
  renderReview,
  renderSearch,
  type AppState,
} from './views.js';

const state: AppState = initialState(new ApiClient(''));

async function route(): Promise<void> {
  const view = (location.hash || '#review').slice(1);
  const main = document.getElementById('view');
  if (!main) return;
  for (const link of document.querySelectorAll('nav a')) {
    link.classList.toggle('active', link.getAttribute('href') === `#${view}`);
  }
  if (view === 'search') {
    renderSearch(main, state);
  } else if (view === 'ontology') {
    await renderOntology(main, state);
  } else {
    if (!state.rows.length) {
      try {
        await loadReview(state);
      } catch {
        // nothing learned yet; the empty table is fine
      }
    }
    renderReview(main, state);
  }
}

window.addEventListener('hashchange', () => void route());
window.addEventListener('DOMContentLoaded', () => void route());
