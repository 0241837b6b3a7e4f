"""Wikidata client: query construction, offline fixture execution, a
response cache that flags silently broken queries, and normalization of
the two identifier annotation schemes.

Two modelings link a formula's identifiers to items:

  scheme a: has part (P527) -> item, with an "in defining formula"
            qualifier holding the symbol
  scheme b: in defining formula (P7235) -> symbol, with a "symbol
            represents" qualifier holding the item

Both normalize to the same (symbol, name, linked_qid) triple; the scheme
survives only in the ``via`` tag.  Responses are standard SPARQL JSON.
In fixture mode every query is answered from a recorded response keyed
by the hash of its text; with ``offline`` set, a missing recording is an
error rather than a network call.
"""

from __future__ import annotations

import datetime as _dt
import enum
import hashlib
import json
import time
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .catalogs import Catalog, CatalogKind, invert_catalog
from .corpus import Source
from .errors import (
    DisambiguationNeeded,
    FixtureMissing,
    SchemaDriftDetected,
    TransportError,
)
from .identifiers import identifiers_in_latex

WIKIDATA_ENDPOINT = "https://query.wikidata.org/sparql"

P_HAS_PART = "P527"
P_CALCULATED_FROM = "P4934"
P_DEFINING_FORMULA = "P2534"
P_IN_DEFINING_FORMULA = "P7235"
P_QUANTITY_SYMBOL_LATEX = "P7973"
P_QUANTITY_SYMBOL_STRING = "P416"
P_HAS_QUALITY = "P1552"

# direct property modelings named for geometry; everything else goes
# through the has-quality form only
GEOMETRY_DIRECT_PROPERTIES = {"area": "P2046", "volume": "P478"}

QUALIFIER_SYMBOL_KEYS = frozenset(
    {"in defining formula", "defining formula", P_IN_DEFINING_FORMULA,
     P_DEFINING_FORMULA}
)
QUALIFIER_ITEM_KEYS = frozenset({"symbol represents"})

_LABEL_SERVICE = (
    'SERVICE wikibase:label { bd:serviceParam wikibase:language "en".}'
)


class QueryPurpose(enum.Enum):
    RELATIONSHIP = "relationship"
    SYMBOL_LOOKUP = "symbol_lookup"
    CONCEPT_FORMULA = "concept_formula"
    GEOMETRY = "geometry"


class LinkVia(enum.Enum):
    HAS_PART = P_HAS_PART
    CALCULATED_FROM = P_CALCULATED_FROM
    IN_DEFINING_FORMULA = P_IN_DEFINING_FORMULA


class CacheStatus(enum.Enum):
    FRESH = "fresh"
    STALE_SERVED = "stale_served"
    BROKEN_ALERTED = "broken_alerted"


@dataclass(frozen=True)
class SparqlQuery:
    text: str
    purpose: QueryPurpose
    expected_columns: tuple

    @property
    def query_hash(self):
        return query_hash(self.text)


@dataclass(frozen=True)
class IdentifierLink:
    symbol: str
    name: str
    linked_qid: str | None
    via: LinkVia
    constant_value: float | None = None

    @property
    def canonical(self):
        return (self.symbol, self.name, self.linked_qid)


@dataclass(frozen=True)
class KgItem:
    qid: str
    label: str
    formula: str | None = None
    identifier_links: tuple = ()


def query_hash(text):
    canonical = " ".join(text.split())
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]


# ---------------------------------------------------------------- builders

def _escape_label(label):
    return label.replace("\\", "\\\\").replace('"', '\\"')


def build_relationship_query(part_qids, via=P_HAS_PART):
    """Items whose parts include every given QID, with their defining
    formula and full part list."""
    lines = [f"?item wdt:{via} wd:{qid}." for qid in part_qids]
    lines.append(f"?item wdt:{P_DEFINING_FORMULA} ?formula.")
    lines.append(f"?item wdt:{via} ?parts")
    body = "\n    ".join(lines)
    text = (
        "SELECT ?item ?itemLabel ?formula ?parts ?partsLabel\n"
        "WHERE {\n"
        f"    {body}\n"
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.RELATIONSHIP,
        expected_columns=("item", "itemLabel", "formula", "parts", "partsLabel"),
    )


def build_relationship_queries(part_qids):
    """The has-part query and its calculated-from sibling."""
    return (
        build_relationship_query(part_qids, via=P_HAS_PART),
        build_relationship_query(part_qids, via=P_CALCULATED_FROM),
    )


def build_symbol_lookup_query():
    """All (item, symbol) pairs under the three symbol properties."""
    branches = " UNION ".join(
        f'{{ ?item wdt:{prop} ?symbol. BIND("{prop}" AS ?property) }}'
        for prop in (P_QUANTITY_SYMBOL_STRING, P_QUANTITY_SYMBOL_LATEX,
                     P_IN_DEFINING_FORMULA)
    )
    text = (
        "SELECT ?item ?itemLabel ?symbol ?property\n"
        "WHERE {\n"
        f"    {branches}\n"
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.SYMBOL_LOOKUP,
        expected_columns=("item", "itemLabel", "symbol", "property"),
    )


def build_label_lookup_query(label, lang="en"):
    text = (
        "SELECT ?item ?itemLabel\n"
        "WHERE {\n"
        f'    ?item rdfs:label "{_escape_label(label)}"@{lang}.\n'
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.RELATIONSHIP,
        expected_columns=("item", "itemLabel"),
    )


def build_concept_formula_query(concept, lang="en"):
    """Items labeled with the concept name and their defining formula,
    when they have one."""
    text = (
        "SELECT ?item ?itemLabel ?formula\n"
        "WHERE {\n"
        f'    ?item rdfs:label "{_escape_label(concept)}"@{lang}.\n'
        f"    OPTIONAL {{ ?item wdt:{P_DEFINING_FORMULA} ?formula. }}\n"
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.CONCEPT_FORMULA,
        expected_columns=("item", "itemLabel", "formula"),
    )


def build_identifier_links_query(qid):
    """Statement groups carrying a formula's identifier annotations in
    either scheme, plus numeric values where the linked item has one."""
    text = (
        "SELECT ?property ?value ?valueLabel ?qualifierProperty "
        "?qualifierValue ?qualifierValueLabel ?numericValue\n"
        "WHERE {\n"
        f"    wd:{qid} ?property ?statement.\n"
        "    ?statement ?qualifierProperty ?qualifierValue.\n"
        f"    VALUES ?property {{ wdt:{P_HAS_PART} wdt:{P_CALCULATED_FROM} "
        f"wdt:{P_IN_DEFINING_FORMULA} }}\n"
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.CONCEPT_FORMULA,
        expected_columns=("property", "value", "qualifierProperty",
                          "qualifierValue"),
    )


def build_defining_formula_query():
    """Every item holding a defining formula."""
    text = (
        "SELECT ?item ?itemLabel ?formula\n"
        "WHERE {\n"
        f"    ?item wdt:{P_DEFINING_FORMULA} ?formula.\n"
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.SYMBOL_LOOKUP,
        expected_columns=("item", "itemLabel", "formula"),
    )


def build_geometry_direct_query(object_label, property_name, lang="en"):
    prop = GEOMETRY_DIRECT_PROPERTIES[property_name]
    text = (
        "SELECT ?item ?itemLabel ?formula\n"
        "WHERE {\n"
        f'    ?item rdfs:label "{_escape_label(object_label)}"@{lang}.\n'
        f"    ?item wdt:{prop} ?formula.\n"
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.GEOMETRY,
        expected_columns=("item", "itemLabel", "formula"),
    )


def build_geometry_quality_query(object_label, property_name, lang="en"):
    text = (
        "SELECT ?item ?itemLabel ?quality ?qualityLabel ?formula\n"
        "WHERE {\n"
        f'    ?item rdfs:label "{_escape_label(object_label)}"@{lang}.\n'
        f"    ?item wdt:{P_HAS_QUALITY} ?quality.\n"
        f'    ?quality rdfs:label "{_escape_label(property_name)}"@{lang}.\n'
        f"    ?quality wdt:{P_DEFINING_FORMULA} ?formula.\n"
        f"{_LABEL_SERVICE}}}"
    )
    return SparqlQuery(
        text=text,
        purpose=QueryPurpose.GEOMETRY,
        expected_columns=("item", "itemLabel", "quality", "qualityLabel",
                          "formula"),
    )


# ---------------------------------------------------------------- execution

@dataclass
class EndpointConfig:
    url: str = WIKIDATA_ENDPOINT
    timeout: float = 30.0
    fixture_dir: Path | None = None
    offline: bool = False
    cache_dir: Path | None = None


class ResultRows(list):
    """Rows of one response; carries the column list even when empty."""

    def __init__(self, rows=(), columns=()):
        super().__init__(rows)
        self.columns = tuple(columns)


def parse_sparql_json(payload):
    """Flatten standard SPARQL JSON into ResultRows."""
    if "boolean" in payload:
        return ResultRows([{"boolean": bool(payload["boolean"])}],
                          columns=("boolean",))
    try:
        columns = tuple(payload["head"]["vars"])
        bindings = payload["results"]["bindings"]
    except (KeyError, TypeError) as exc:
        raise SchemaDriftDetected(f"response is not SPARQL JSON: {exc}")
    rows = []
    for binding in bindings:
        row = {}
        for var, cell in binding.items():
            row[var] = cell.get("value") if isinstance(cell, dict) else cell
        rows.append(row)
    return ResultRows(rows, columns=columns)


class FixtureStore:
    """Recorded responses, one JSON file per query, keyed by query hash."""

    def __init__(self, directory):
        self.directory = Path(directory)
        self._by_hash = {}
        for path in sorted(self.directory.glob("*.json")):
            data = json.loads(path.read_text("utf-8"))
            self._by_hash[data["query_hash"]] = data["response"]

    def __len__(self):
        return len(self._by_hash)

    def lookup(self, qhash):
        return self._by_hash.get(qhash)

    def responses(self):
        return list(self._by_hash.values())


def _requests_transport(url, query_text, timeout):
    import requests

    try:
        response = requests.get(
            url,
            params={"query": query_text, "format": "json"},
            headers={"Accept": "application/sparql-results+json",
                     "User-Agent": "mathqa/0.1 (formula question answering)"},
            timeout=timeout,
        )
        response.raise_for_status()
        return response.json()
    except requests.RequestException as exc:
        raise TransportError(f"endpoint {url} unreachable: {exc}") from exc
    except ValueError as exc:
        raise TransportError(f"endpoint {url} returned non-JSON: {exc}") from exc


def execute(query, config, transport=None, fixtures=None):
    """Rows for one query: recorded response when available, live
    transport otherwise.  Offline mode never touches the network."""
    if fixtures is None and config.fixture_dir is not None:
        fixtures = FixtureStore(config.fixture_dir)
    if fixtures is not None:
        payload = fixtures.lookup(query.query_hash)
        if payload is not None:
            return parse_sparql_json(payload)
        if config.offline:
            raise FixtureMissing(query.query_hash, fixtures.directory)
    if config.offline:
        raise TransportError("offline mode with no fixture directory")
    if transport is None:
        transport = _requests_transport
    payload = transport(config.url, query.text, config.timeout)
    return parse_sparql_json(payload)


# ---------------------------------------------------------------- cache

@dataclass
class CacheEntry:
    query_hash: str
    columns: tuple
    rows: list
    fetched_at: float


class QueryCache:
    """Directory-backed response cache with breakage alerts.

    A query whose cached response was non-empty but now comes back empty
    or column-reshaped is treated as silently broken upstream: the cached
    rows are served, the status is BROKEN_ALERTED, and one alert line per
    query and day is appended to alerts.log.
    """

    def __init__(self, directory):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.alerts_path = self.directory / "alerts.log"

    def _entry_path(self, qhash):
        return self.directory / f"{qhash}.json"

    def get(self, qhash):
        path = self._entry_path(qhash)
        if not path.exists():
            return None
        data = json.loads(path.read_text("utf-8"))
        return CacheEntry(
            query_hash=data["query_hash"],
            columns=tuple(data["columns"]),
            rows=data["rows"],
            fetched_at=data["fetched_at"],
        )

    def put(self, qhash, columns, rows):
        payload = {
            "query_hash": qhash,
            "columns": list(columns),
            "rows": list(rows),
            "fetched_at": time.time(),
        }
        self._entry_path(qhash).write_text(
            json.dumps(payload, ensure_ascii=False, sort_keys=True), "utf-8"
        )

    def _alerted_today(self, qhash, day):
        if not self.alerts_path.exists():
            return False
        for line in self.alerts_path.read_text("utf-8").splitlines():
            if not line.strip():
                continue
            record = json.loads(line)
            if record["query_hash"] == qhash and record["date"] == day:
                return True
        return False

    def alert(self, qhash, reason):
        day = _dt.date.today().isoformat()
        if self._alerted_today(qhash, day):
            return False
        record = {"query_hash": qhash, "date": day, "reason": reason}
        with self.alerts_path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")
        return True


def cached_execute(query, config, cache, transport=None, fixtures=None):
    """Execute with cache semantics; returns (rows, CacheStatus)."""
    qhash = query.query_hash
    entry = cache.get(qhash) if cache is not None else None
    try:
        rows = execute(query, config, transport=transport, fixtures=fixtures)
    except TransportError:
        if entry is not None:
            return ResultRows(entry.rows, entry.columns), CacheStatus.STALE_SERVED
        raise
    if entry is not None and entry.rows:
        broke = not rows or tuple(rows.columns) != entry.columns
        if broke:
            reason = ("empty result for a previously non-empty query"
                      if not rows else
                      f"columns changed {entry.columns} -> {tuple(rows.columns)}")
            cache.alert(qhash, reason)
            return ResultRows(entry.rows, entry.columns), CacheStatus.BROKEN_ALERTED
    if cache is not None:
        cache.put(qhash, rows.columns, rows)
    return rows, CacheStatus.FRESH


# ---------------------------------------------------------------- schemes

def _require(row, key, context):
    value = row.get(key)
    if value in (None, ""):
        raise SchemaDriftDetected(
            f"{context}: row lacks {key!r}: {sorted(row)}"
        )
    return value


def _qid(value):
    return value.rsplit("/", 1)[-1] if "/" in value else value


def normalize_identifier_links(rows):
    """Map statement rows from either annotation scheme to IdentifierLink.

    Rows whose shape matches neither scheme raise SchemaDriftDetected.
    """
    links = []
    seen = set()
    for row in rows:
        prop = _qid(_require(row, "property", "identifier link"))
        qualifier = row.get("qualifierProperty", "")
        constant = row.get("numericValue")
        constant_value = float(constant) if constant not in (None, "") else None
        if prop in (P_HAS_PART, P_CALCULATED_FROM):
            if qualifier not in QUALIFIER_SYMBOL_KEYS:
                raise SchemaDriftDetected(
                    f"has-part link with unknown qualifier {qualifier!r}"
                )
            link = IdentifierLink(
                symbol=_require(row, "qualifierValue", "scheme a link"),
                name=_require(row, "valueLabel", "scheme a link"),
                linked_qid=_qid(_require(row, "value", "scheme a link")),
                via=LinkVia(prop),
                constant_value=constant_value,
            )
        elif prop == P_IN_DEFINING_FORMULA:
            if qualifier not in QUALIFIER_ITEM_KEYS:
                raise SchemaDriftDetected(
                    f"in-defining-formula link with unknown qualifier "
                    f"{qualifier!r}"
                )
            link = IdentifierLink(
                symbol=_require(row, "value", "scheme b link"),
                name=_require(row, "qualifierValueLabel", "scheme b link"),
                linked_qid=_qid(_require(row, "qualifierValue", "scheme b link")),
                via=LinkVia.IN_DEFINING_FORMULA,
                constant_value=constant_value,
            )
        else:
            raise SchemaDriftDetected(f"unknown link property {prop!r}")
        if link.canonical not in seen:
            seen.add(link.canonical)
            links.append(link)
    return links


# ---------------------------------------------------------------- façade

class KnowledgeGraph:
    """High-level knowledge-graph operations over one endpoint config."""

    def __init__(self, config=None, cache=None, transport=None):
        self.config = config or EndpointConfig()
        self.cache = cache
        self.transport = transport
        self.fixtures = (FixtureStore(self.config.fixture_dir)
                         if self.config.fixture_dir else None)
        self.last_status = None

    def run(self, query):
        if self.cache is not None:
            rows, status = cached_execute(
                query, self.config, self.cache,
                transport=self.transport, fixtures=self.fixtures,
            )
            self.last_status = status
            return rows
        self.last_status = CacheStatus.FRESH
        return execute(query, self.config, transport=self.transport,
                       fixtures=self.fixtures)

    def _run_soft(self, query):
        """Missing fixture reads as an empty result."""
        try:
            return self.run(query)
        except FixtureMissing:
            return ResultRows([], ())

    def label_to_qids(self, label, lang="en"):
        rows = self._run_soft(build_label_lookup_query(label, lang))
        out = []
        for row in rows:
            qid = _qid(row.get("item", ""))
            if qid and qid not in (q for q, _ in out):
                out.append((qid, row.get("itemLabel", label)))
        return out

    def relationship_candidates(self, qids):
        """Items whose parts cover all the QIDs, has-part modeling first."""
        merged = []
        seen = set()
        for query in build_relationship_queries(qids):
            for row in self._run_soft(query):
                qid = _qid(row.get("item", ""))
                formula = row.get("formula")
                if not qid or not formula:
                    continue
                key = (qid, formula)
                if key not in seen:
                    seen.add(key)
                    merged.append(
                        {"qid": qid, "label": row.get("itemLabel", qid),
                         "formula": formula}
                    )
        return merged

    def concept_candidates(self, concept, lang="en"):
        rows = self._run_soft(build_concept_formula_query(concept, lang))
        out = []
        seen = set()
        for row in rows:
            qid = _qid(row.get("item", ""))
            if not qid or qid in seen:
                continue
            seen.add(qid)
            out.append({"qid": qid, "label": row.get("itemLabel", concept),
                        "formula": row.get("formula")})
        return out

    def resolve_concept(self, concept, lang="en"):
        """Pick the single item answering a concept query.

        Several labeled items: prefer the one holding a defining formula;
        several (or none) holding one -> DisambiguationNeeded.
        """
        candidates = self.concept_candidates(concept, lang)
        if not candidates:
            return None
        with_formula = [c for c in candidates if c["formula"]]
        if len(with_formula) == 1:
            chosen = with_formula[0]
            alternatives = [c for c in candidates if c is not chosen]
            return chosen, alternatives
        if len(candidates) == 1:
            return candidates[0], []
        pool = with_formula or candidates
        raise DisambiguationNeeded(
            concept, [(c["qid"], c["label"]) for c in pool]
        )

    def identifier_links(self, qid):
        rows = self._run_soft(build_identifier_links_query(qid))
        return normalize_identifier_links(rows)

    def item(self, qid, label, formula=None):
        return KgItem(qid=qid, label=label, formula=formula,
                      identifier_links=tuple(self.identifier_links(qid)))

    def symbol_catalogs(self):
        """SYMBOL_TO_NAME / NAME_TO_SYMBOL catalogs from the symbol table."""
        rows = self._run_soft(build_symbol_lookup_query())
        counts = defaultdict(lambda: defaultdict(int))
        for row in rows:
            symbol = row.get("symbol")
            label = (row.get("itemLabel") or "").lower()
            if symbol and label:
                counts[symbol][label] += 1
        entries = {
            symbol: sorted(by_name.items(), key=lambda kv: (-kv[1], kv[0]))
            for symbol, by_name in sorted(counts.items())
        }
        symbol_to_name = Catalog(
            kind=CatalogKind.SYMBOL_TO_NAME, entries=entries,
            source=Source.WIKIDATA, doc_count=len(rows),
        )
        return symbol_to_name, invert_catalog(symbol_to_name)

    def all_defining_formulas(self):
        rows = self._run_soft(build_defining_formula_query())
        out = []
        for row in rows:
            qid = _qid(row.get("item", ""))
            formula = row.get("formula")
            if qid and formula:
                out.append({"qid": qid, "label": row.get("itemLabel", qid),
                            "formula": formula})
        return out

    def formulas_by_symbols(self, symbols):
        """Defining formulas containing every requested symbol."""
        matches = []
        for candidate in self.all_defining_formulas():
            found = identifiers_in_latex(candidate["formula"])
            if all(sym in found for sym in symbols):
                matches.append(candidate)
        return matches

    def geometry_candidates(self, object_label, property_name, lang="en"):
        """Both geometry modelings, direct property first, merged."""
        merged = []
        seen = set()
        queries = []
        if property_name in GEOMETRY_DIRECT_PROPERTIES:
            queries.append(
                build_geometry_direct_query(object_label, property_name, lang)
            )
        queries.append(
            build_geometry_quality_query(object_label, property_name, lang)
        )
        for query in queries:
            for row in self._run_soft(query):
                qid = _qid(row.get("item", ""))
                formula = row.get("formula")
                if not qid or not formula:
                    continue
                key = (qid, formula)
                if key not in seen:
                    seen.add(key)
                    merged.append(
                        {"qid": qid, "label": row.get("itemLabel", object_label),
                         "formula": formula}
                    )
        return merged

    def constants(self):
        """symbol -> numeric value, scanned from recorded link responses."""
        if self.fixtures is None:
            return {}
        found = {}
        for payload in self.fixtures.responses():
            try:
                rows = parse_sparql_json(payload)
                links = normalize_identifier_links(rows)
            except SchemaDriftDetected:
                continue
            for link in links:
                if link.constant_value is None:
                    continue
                current = found.get(link.symbol)
                if current is None or (link.linked_qid or "") < current[0]:
                    found[link.symbol] = (link.linked_qid or "",
                                          link.constant_value)
        return {symbol: value for symbol, (_, value) in sorted(found.items())}
