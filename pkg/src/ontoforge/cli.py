"""Operator command line: fetch, learn, review, compare, index, search,
select and serve.

Data goes to stdout (``--json`` for machine-readable form), diagnostics to
stderr.  Exit status is 0 exactly when the command's contract was
fulfilled.  Nothing here uses randomness, so re-runs on unchanged inputs
produce byte-identical artifacts.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import evaluation, ingest, ontology, pom, rdf, search
from .config import ConfigError, PipelineConfig, load_config, override_config
from .pipeline import (
    PipelineError,
    load_wordnet_db,
    run_index,
    run_learn,
)
from .wordnet import WordnetLoadError


def _err(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _build_config(args) -> PipelineConfig:
    config = load_config(args.config) if args.config else PipelineConfig()
    overrides = {
        name: getattr(args, name)
        for name in (
            "corpus_dir", "wordnet_dir", "rules_path", "lexicon_path",
            "static_theta", "sim_threshold", "separator", "max_distance",
            "decay", "boost_factor", "base_iri", "out_dir", "repo_dir",
            "profiles_dir", "listen", "assets_dir", "window",
            "literal_weight", "increment", "max_chars",
        )
        if hasattr(args, name)
    }
    return override_config(config, **overrides)


def _add_common(parser: argparse.ArgumentParser, *names: str) -> None:
    parser.add_argument("--config", help="key = value configuration file")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    flags = {
        "corpus_dir": ("--corpus-dir", str),
        "wordnet_dir": ("--wordnet-dir", str),
        "rules_path": ("--rules", str),
        "lexicon_path": ("--lexicon", str),
        "static_theta": ("--theta", float),
        "sim_threshold": ("--sim-threshold", float),
        "separator": ("--separator", str),
        "max_distance": ("--max-distance", int),
        "decay": ("--decay", float),
        "boost_factor": ("--boost-factor", float),
        "base_iri": ("--base-iri", str),
        "out_dir": ("--out-dir", str),
        "repo_dir": ("--repo-dir", str),
        "profiles_dir": ("--profiles-dir", str),
        "listen": ("--listen", str),
        "assets_dir": ("--assets-dir", str),
        "window": ("--window", int),
        "literal_weight": ("--literal-weight", float),
        "increment": ("--increment", float),
        "max_chars": ("--max-chars", int),
    }
    for name in names:
        flag, kind = flags[name]
        parser.add_argument(flag, dest=name, type=kind, default=None)


def cmd_fetch(args) -> int:
    config = _build_config(args)
    sources = ingest.read_source_list(args.source_list)
    try:
        fetched = ingest.fetch_documents(sources)
    except ingest.AllSourcesFailedError as exc:
        _err(str(exc))
        return 1
    for source, message in fetched.errors:
        print(f"warning: {source}: {message}", file=sys.stderr)
    corpus = ingest.Corpus()
    taken: set[str] = set()
    for raw in fetched.documents:
        text = ingest.strip_markup(raw)
        doc_id = ingest.derive_doc_id(raw.source_id, taken)
        corpus = ingest.add_document(corpus, text, doc_id, raw.source_id)
    if not corpus.documents:
        _err("no documents fetched")
        return 1
    ingest.save_corpus(corpus, config.corpus_dir)
    report = ingest.corpus_budget_check(corpus, config.max_chars)
    if args.json:
        payload = {
            "documents": len(corpus.documents),
            "errors": [{"source": s, "message": m} for s, m in fetched.errors],
            "total_chars": report.total_chars,
            "max_chars": report.max_chars,
            "within_budget": report.within_budget,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(f"fetched {len(corpus.documents)} documents into {config.corpus_dir}")
        status = "within" if report.within_budget else "OVER"
        print(f"corpus size {report.total_chars} chars, {status} budget of {report.max_chars}")
    return 0


def cmd_learn(args) -> int:
    config = _build_config(args)
    try:
        result = run_learn(config, reduce=args.reduce, review_path=args.review)
    except (PipelineError, ingest.IngestError) as exc:
        _err(str(exc))
        return 1
    except pom.ReviewFileError as exc:
        _err(f"review file: {exc}")
        return 1
    if not result.ontology.concepts:
        print("warning: no concepts passed the threshold", file=sys.stderr)
    if args.json:
        sys.stdout.write(json.dumps(result.summary, indent=2) + "\n")
    else:
        summary = result.summary
        print(
            f"learned {summary['concepts']} concepts, {summary['relations']} relations, "
            f"{summary['subclass_edges']} subclass edges "
            f"({summary['pom_entities']} POM entities)"
        )
        print(f"artifacts in {config.out_dir}: pom.json relations.tsv ontology.ttl")
    return 0


def cmd_review(args) -> int:
    config = _build_config(args)
    pom_path = args.pom or str(config.pom_path)
    try:
        model = pom.load_pom(pom_path)
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        _err(f"cannot load {pom_path}: {exc}")
        return 1
    if args.action == "export":
        pom.export_review(model, args.file)
        print(f"wrote review file {args.file} ({len(model.entities)} entities)", file=sys.stderr)
        return 0
    try:
        updated = pom.import_review(model, args.file)
    except pom.ReviewFileError as exc:
        _err(str(exc))
        return 1
    pom.save_pom(updated, pom_path)
    changed = sum(1 for e in updated.entities.values() if e.override is not None)
    if args.json:
        sys.stdout.write(json.dumps({"overrides": changed}, indent=2) + "\n")
    else:
        print(f"imported overrides; {changed} entities now carry one")
    return 0


def cmd_compare(args) -> int:
    config = _build_config(args)
    try:
        onto = ontology.load_ontology(args.ontology)
    except (OSError, rdf.RdfSyntaxError) as exc:
        _err(f"cannot load ontology: {exc}")
        return 1
    reference = Path(args.reference)
    try:
        if reference.suffix.lower() in (".ttl", ".nt", ".turtle"):
            manual = ontology.extract_classes(rdf.parse_rdf(reference))
        else:
            manual = ontology.load_class_list(reference)
    except (OSError, rdf.RdfSyntaxError) as exc:
        _err(f"cannot load reference: {exc}")
        return 1
    try:
        db = load_wordnet_db(config)
    except WordnetLoadError as exc:
        _err(str(exc))
        return 1
    report = evaluation.compare(onto, manual, db, case_name=args.name)
    if args.json:
        sys.stdout.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(evaluation.format_report(report))
    return 0


def cmd_index(args) -> int:
    config = _build_config(args)
    ontology_path = args.ontology or str(config.ontology_path)
    try:
        onto = ontology.load_ontology(ontology_path)
        db = load_wordnet_db(config)
        idx = run_index(config, onto, db)
    except (OSError, rdf.RdfSyntaxError, WordnetLoadError, search.SearchError) as exc:
        _err(str(exc))
        return 1
    payload = {
        "documents": len(idx.doc_titles),
        "concepts_with_documents": sum(1 for d in idx.concept_to_docs.values() if d),
    }
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        print(
            f"indexed {payload['documents']} documents; "
            f"{payload['concepts_with_documents']} concepts have matches"
        )
    return 0


def _load_search_state(args, config: PipelineConfig):
    ontology_path = args.ontology or str(config.ontology_path)
    index_path = args.index or str(config.index_path)
    onto = ontology.load_ontology(ontology_path)
    idx = search.load_index(index_path)
    db = load_wordnet_db(config)
    return onto, idx, db


def cmd_search(args) -> int:
    config = _build_config(args)
    try:
        onto, idx, db = _load_search_state(args, config)
    except (OSError, rdf.RdfSyntaxError, WordnetLoadError, json.JSONDecodeError) as exc:
        _err(str(exc))
        return 1
    profile = search.load_profile(config.profiles_dir, args.user)
    try:
        expanded = search.expand_query(
            args.terms, onto, db,
            max_distance=config.max_distance,
            decay=config.decay,
            mode=args.mode,
        )
        results = search.execute_query(expanded, idx, profile, config.literal_weight)
    except search.EmptyExpansionError:
        results = []
    except search.SearchError as exc:
        _err(str(exc))
        return 1
    if args.json:
        sys.stdout.write(search.results_json(results))
    else:
        if not results:
            print("no results")
        for result in results:
            matched = ", ".join(f"{label}:{weight:g}" for label, weight in result.matched_concepts)
            print(f"{result.score:.4f}\t{result.doc_id}\t{result.title}\t[{matched}]")
    return 0


def cmd_select(args) -> int:
    config = _build_config(args)
    index_path = args.index or str(config.index_path)
    try:
        idx = search.load_index(index_path)
    except (OSError, json.JSONDecodeError) as exc:
        _err(str(exc))
        return 1
    profile = search.load_profile(config.profiles_dir, args.user)
    try:
        profile = search.record_selection(profile, args.doc_id, idx, config.increment)
    except search.UnknownDocumentError as exc:
        _err(str(exc))
        return 1
    search.save_profile(profile, config.profiles_dir)
    concepts = sorted(idx.doc_to_concepts.get(args.doc_id, ()))
    ratings = {c: profile.rating(c) for c in concepts}
    if args.json:
        sys.stdout.write(json.dumps({"user": args.user, "ratings": ratings}, indent=2) + "\n")
    else:
        print(f"recorded selection of {args.doc_id} for {args.user}")
        for concept, rating in ratings.items():
            print(f"  {concept}: {rating:g}")
    return 0


def cmd_serve(args) -> int:
    from .service import serve  # deferred: pulls in the HTTP stack

    config = _build_config(args)
    try:
        serve(config)
    except KeyboardInterrupt:
        pass
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontoforge",
        description="Learn a domain ontology from text and search documents with it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fetch", help="fetch sources into the text corpus")
    p.add_argument("source_list", help="file with one path or URL per line")
    _add_common(p, "corpus_dir", "max_chars")
    p.set_defaults(func=cmd_fetch)

    p = sub.add_parser("learn", help="learn the ontology from the corpus")
    p.add_argument("--reduce", action="store_true", help="apply similarity reduction")
    p.add_argument("--review", help="review TSV applied as variable threshold")
    _add_common(
        p, "corpus_dir", "wordnet_dir", "rules_path", "lexicon_path",
        "static_theta", "sim_threshold", "separator", "base_iri", "out_dir",
        "window",
    )
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("review", help="export or import the concept review file")
    p.add_argument("action", choices=("export", "import"))
    p.add_argument("file", help="review TSV path")
    p.add_argument("--pom", help="pom.json path (default: <out-dir>/pom.json)")
    _add_common(p, "out_dir")
    p.set_defaults(func=cmd_review)

    p = sub.add_parser("compare", help="compare an ontology against a reference")
    p.add_argument("ontology", help="generated ontology.ttl")
    p.add_argument("reference", help="reference .ttl or class-list file")
    p.add_argument("--name", default="comparison", help="case name for the report")
    _add_common(p, "wordnet_dir")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("index", help="index the document repository")
    p.add_argument("--ontology", help="ontology.ttl path (default: <out-dir>/ontology.ttl)")
    _add_common(p, "repo_dir", "wordnet_dir", "out_dir", "lexicon_path", "window")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("search", help="query the indexed repository")
    p.add_argument("terms", nargs="+", help="query terms")
    p.add_argument("--user", default="anonymous")
    p.add_argument("--mode", choices=search.QUERY_MODES, default="expand")
    p.add_argument("--ontology", help="ontology.ttl path")
    p.add_argument("--index", help="index.json path")
    _add_common(
        p, "wordnet_dir", "out_dir", "profiles_dir", "max_distance",
        "decay", "literal_weight",
    )
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("select", help="record a result selection for a user")
    p.add_argument("user")
    p.add_argument("doc_id")
    p.add_argument("--index", help="index.json path")
    _add_common(p, "out_dir", "profiles_dir", "increment")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("serve", help="run the HTTP/JSON API service")
    _add_common(
        p, "corpus_dir", "wordnet_dir", "rules_path", "static_theta",
        "sim_threshold", "out_dir", "repo_dir", "profiles_dir", "listen",
        "assets_dir", "max_distance", "decay", "literal_weight", "increment",
    )
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
