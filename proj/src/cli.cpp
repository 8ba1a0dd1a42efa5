#include "zsr/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "zsr/cache.hpp"
#include "zsr/coloring.hpp"
#include "zsr/decomposition.hpp"
#include "zsr/errors.hpp"
#include "zsr/ramsey.hpp"
#include "zsr/serialize.hpp"
#include "zsr/zerosum.hpp"

namespace zsr {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInternal = 3;

const char* const kComputed = "computed";
const char* const kCached = "cached";
const char* const kInput = "input";

// ------------------------------------------------------------------ output

struct Row {
    std::string key;
    Json value;
    std::string provenance;
    std::string human;  // replaces value.dump() in human output when set
};

class Report {
public:
    void add(std::string key, Json value, std::string provenance, std::string human = {}) {
        rows_.push_back({std::move(key), std::move(value), std::move(provenance), std::move(human)});
    }

    void add_bound(const std::string& key, const BoundReport& b) {
        std::string text = "lower " + std::to_string(b.lower) + ", upper " + std::to_string(b.upper);
        if (b.exact) text += ", exact " + std::to_string(*b.exact);
        std::string names;
        for (const auto& p : b.provenance) names += (names.empty() ? "" : "; ") + p.name + ": " + p.formula;
        add(key, to_json(b), names, text);
    }

    void emit(std::ostream& out, const std::string& format) const {
        if (format == "json") {
            Json obj = Json::object();
            for (const auto& r : rows_)
                obj[r.key] = r.provenance.empty() ? r.value : Json{{"provenance", r.provenance}, {"value", r.value}};
            out << obj.dump(2) << '\n';
        } else if (format == "csv") {
            out << "key,value,provenance\n";
            for (const auto& r : rows_)
                out << csv(r.key) << ',' << csv(r.value.is_string() ? r.value.get<std::string>() : r.value.dump()) << ','
                    << csv(r.provenance) << '\n';
        } else {
            for (const auto& r : rows_) {
                out << r.key << ": ";
                if (!r.human.empty())
                    out << r.human;
                else
                    out << (r.value.is_string() ? r.value.get<std::string>() : r.value.dump());
                if (!r.provenance.empty()) out << "  [" << r.provenance << ']';
                out << '\n';
            }
        }
    }

    static std::string csv(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + '"';
    }

private:
    std::vector<Row> rows_;
};

void write_json_file(const std::string& path, const Json& j) {
    namespace fs = std::filesystem;
    fs::path tmp(path);
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump(2) << '\n';
        if (!out) throw InternalError("cannot write " + path);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InternalError("cannot write " + path);
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const std::exception&) {
        throw StructuralError(path + " is not valid JSON");
    }
}

// ----------------------------------------------------------------- session

struct Globals {
    std::string cache_path;
    bool no_cache = false;
    double budget = 60.0;
    std::uint64_t nodes = 100'000'000;
    std::uint64_t seed = 0;
    std::string format = "human";
    int jobs = 1;
};

struct Sourced {
    InvariantResult res;
    std::string provenance;
};

// Invariant lookups backed by the cache; computed exact values are stored.
class Session {
public:
    Session(const Globals& g, std::ostream& err) : g_(g), err_(err) {}

    SearchLimits limits() const { return {g_.nodes, g_.budget, std::max(1, g_.jobs)}; }
    const Globals& globals() const { return g_; }

    Sourced davenport(const Group& group) {
        if (const InvariantRecord* rec = cached(group); rec && rec->davenport)
            return {exact_result(*rec->davenport, rec->witnesses.at("davenport")), kCached};
        InvariantResult res = zsr::davenport(group, limits());
        if (res.is_exact()) {
            InvariantRecord& rec = doc().record(group);
            rec.davenport = res.value;
            rec.witnesses["davenport"] = res.witness;
            commit(rec);
        }
        return {res, kComputed};
    }

    Sourced egz(const Group& group, int m) {
        if (const InvariantRecord* rec = cached(group); rec && rec->egz.count(m))
            return {exact_result(rec->egz.at(m), rec->witnesses.at(egz_witness_key(m))), kCached};
        InvariantResult res = egz_invariant(group, m, limits());
        if (res.is_exact()) {
            InvariantRecord& rec = doc().record(group);
            rec.egz[m] = res.value;
            rec.witnesses[egz_witness_key(m)] = res.witness;
            commit(rec);
        }
        return {res, kComputed};
    }

    std::optional<int> cached_ell(const Group& group) {
        const InvariantRecord* rec = cached(group);
        return rec ? rec->ell : std::nullopt;
    }

    void store_ell(const Group& group, int ell) {
        if (g_.no_cache) return;
        doc().record(group).ell = ell;
        commit(doc().record(group));
    }

    void flush() {
        if (dirty_ && !g_.no_cache) cache_store(*doc_, g_.cache_path);
        dirty_ = false;
    }

private:
    static InvariantResult exact_result(int value, const GSeq& witness) {
        InvariantResult r;
        r.status = SearchStatus::exact;
        r.value = r.upper = value;
        r.witness = witness;
        return r;
    }

    CacheDocument& doc() {
        if (!doc_) {
            if (g_.no_cache) {
                doc_.emplace();
            } else {
                CacheLoad load = cache_load(g_.cache_path);
                for (const auto& w : load.warnings) err_ << "warning: " << w << '\n';
                doc_ = std::move(load.doc);
            }
        }
        return *doc_;
    }

    const InvariantRecord* cached(const Group& group) {
        if (g_.no_cache) return nullptr;
        return doc().find(group);
    }

    void commit(const InvariantRecord& rec) {
        if (const auto problem = validate_record(rec))
            throw InternalError("computed invariants for " + rec.group.name() + " fail validation: " + *problem);
        dirty_ = !g_.no_cache;
    }

    const Globals& g_;
    std::ostream& err_;
    std::optional<CacheDocument> doc_;
    bool dirty_ = false;
};

// ---------------------------------------------------------------- helpers

int resolve_m(const Group& group, const std::optional<int>& m, const std::optional<int>& k) {
    if (m && k) throw DomainError("give either --m or --k, not both");
    if (k) {
        if (*k < 1) throw DomainError("k must be >= 1");
        return *k * group.exponent();
    }
    if (!m) throw DomainError("one of --m or --k is required");
    return *m;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("'" + text + "' is not a comma-separated list of integers");
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

void add_invariant(Report& rep, const std::string& key, const Sourced& s, const char* lower_source) {
    if (s.res.is_exact()) {
        rep.add(key, s.res.value, s.provenance);
    } else {
        rep.add(key, nullptr, "undetermined within budget", "undetermined");
        rep.add(key + "_lower", s.res.value, lower_source);
        rep.add(key + "_upper", s.res.upper, "elementary upper bound");
    }
    rep.add("status", status_name(s.res.status), "");
}

std::string default_cert_path(const RamseyQuery& q) {
    std::string kind = q.kind.name();
    for (char& c : kind)
        if (c == '(' || c == ')') c = c == '(' ? '-' : ' ';
    kind.erase(std::remove(kind.begin(), kind.end(), ' '), kind.end());
    std::string g = q.group.factor_list();
    std::replace(g.begin(), g.end(), ',', 'x');
    if (g.empty()) g = "1";
    return "zsr-cert-Z" + g + "-r" + std::to_string(q.r) + "-m" + std::to_string(q.m) + "-" + kind + ".json";
}

void add_ramsey(Report& rep, const std::string& prefix, const RamseyResult& res) {
    const auto ex = res.exact();
    rep.add(prefix + "value", ex ? Json(*ex) : Json(nullptr), ex ? "exhaustive search" : "undetermined within budget",
            ex ? "" : "undetermined");
    rep.add(prefix + "lower", res.lower, "bad coloring certificate of K_" + std::to_string(res.lower - 1));
    if (res.upper)
        rep.add(prefix + "upper", *res.upper, "exhaustive search at n = " + std::to_string(*res.upper));
    else
        rep.add(prefix + "upper", nullptr, "no exhausted level within n_max and budget", "unknown");
    Json levels = Json::array();
    std::vector<std::string> text;
    for (const auto& lv : res.levels) {
        levels.push_back(to_json(lv));
        text.push_back("n=" + std::to_string(lv.n) + " " + outcome_name(lv.outcome));
    }
    rep.add(prefix + "levels", levels, "computed", join(text, ", "));
}

// --------------------------------------------------------------- commands

struct Args {
    std::string group;
    std::optional<int> m, k, r, q, s, t, n, nmax, nstart;
    std::string sizes, file, out, kind = "hyperstar", variant = "minus-two", cert;
    std::string groups = "2;3;2,2", ks = "1", rs = "2,3";
    bool no_star_bound = false, no_symmetry = false, ramsey = false;
};

int cmd_group_canon(Session&, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    rep.add("group", g.name(), "");
    rep.add("factors", to_json(g), "invariant-factor form");
    rep.add("order", g.order(), kComputed);
    rep.add("exponent", g.exponent(), kComputed);
    return kExitOk;
}

int cmd_inv_davenport(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const Sourced d = ses.davenport(g);
    rep.add("group", g.name(), "");
    add_invariant(rep, "D", d, "longest zero-sum free sequence found, plus one");
    rep.add("witness", to_json(d.res.witness), d.res.is_exact() ? "zero-sum free, length D - 1, verified" : "zero-sum free, verified");
    return d.res.is_exact() ? kExitOk : kExitInconclusive;
}

int cmd_inv_egz(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int m = resolve_m(g, a.m, a.k);
    const Sourced s = ses.egz(g, m);
    rep.add("group", g.name(), "");
    rep.add("m", m, kInput);
    add_invariant(rep, "s_" + std::to_string(m), s, "longest sequence found without a zero-sum m-subsequence, plus one");
    rep.add("witness", to_json(s.res.witness), "no zero-sum subsequence of length m, verified");
    return s.res.is_exact() ? kExitOk : kExitInconclusive;
}

int cmd_inv_ell(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    rep.add("group", g.name(), "");
    if (const auto ell = ses.cached_ell(g)) {
        rep.add("ell", *ell, kCached);
        rep.add("status", "exact", "");
        return kExitOk;
    }
    const EllResult e = ell_invariant(g, ses.limits());
    if (e.status == SearchStatus::exact) {
        rep.add("ell", e.value, e.pinched ? "D/exp <= ell <= |G|/exp pinch" : kComputed);
        ses.store_ell(g, e.value);
    } else {
        rep.add("ell", nullptr, "undetermined within budget", "undetermined");
    }
    rep.add("lower", e.lower, "ceil(D/exp)");
    rep.add("upper", e.upper, "|G|/exp");
    rep.add("D", e.davenport, kComputed);
    Json sv = Json::object();
    for (const auto& [k, v] : e.s_values) sv[std::to_string(k * g.exponent())] = v;
    rep.add("s_values", sv, kComputed);
    rep.add("status", status_name(e.status), "");
    return e.status == SearchStatus::exact ? kExitOk : kExitInconclusive;
}

int cmd_omega(Session&, const Args& a, Report& rep) {
    if (!a.s || !a.r) throw DomainError("omega needs --s and --r");
    if (*a.r < 2) throw DomainError("r must be >= 2");
    rep.add("s", *a.s, kInput);
    rep.add("r", *a.r, kInput);
    rep.add("omega", omega(*a.s, *a.r), "least n with C(n-1, r-1) >= s");
    return kExitOk;
}

int need_r(const Args& a) {
    if (!a.r) throw DomainError("--r is required");
    return *a.r;
}

int cmd_bounds_t1(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int r = need_r(a);
    if (r < 2) throw DomainError("r must be >= 2");
    const int m = resolve_m(g, std::nullopt, a.k ? a.k : std::optional<int>(1));
    const Sourced s = ses.egz(g, m);
    rep.add("group", g.name(), "");
    rep.add("m", m, "k exp(G)");
    rep.add("r", r, kInput);
    add_invariant(rep, "s", s, "longest sequence found without a zero-sum m-subsequence, plus one");
    if (s.res.is_exact()) {
        const StarBounds b = theorem1_bounds(s.res.value, m, r);
        rep.add("omega", b.omega, "least n with C(n-1, r-1) >= s");
        rep.add_bound("intersecting", b.intersecting);
        rep.add_bound("hyperstar", b.hyperstar);
        return kExitOk;
    }
    BoundReport rb{omega(s.res.value, r) - 1, omega(s.res.upper, r), std::nullopt,
                   {{"hypermatching coloring lower bound", "R_I >= Omega(s) - 1"},
                    {"hyperstar pigeonhole upper bound", "R_S <= Omega(s)"}}};
    rep.add_bound("intersecting", rb);
    rep.add_bound("hyperstar", rb);
    return kExitInconclusive;
}

int cmd_bounds_t2(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int r = need_r(a);
    if (!a.q || !a.m) throw DomainError("delta-system bounds need --q and --m");
    if (!(r > *a.q && *a.q >= 0)) throw DomainError("need r > q >= 0");
    if (*a.m < g.order()) throw DomainError("delta-system bounds need m >= |G|");
    if (*a.m % g.exponent() != 0) throw DomainError("delta-system bounds need exp(G) | m");
    const Sourced d = ses.davenport(g);
    rep.add("group", g.name(), "");
    rep.add("r", r, kInput);
    rep.add("q", *a.q, kInput);
    rep.add("m", *a.m, kInput);
    add_invariant(rep, "D", d, "longest zero-sum free sequence found, plus one");
    if (!d.res.is_exact()) return kExitInconclusive;
    rep.add_bound("delta", theorem2_bounds(d.res.value, g.order(), g.exponent(), r, *a.q, *a.m));
    return kExitOk;
}

int cmd_bounds_corollary(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int m = resolve_m(g, std::nullopt, a.k ? a.k : std::optional<int>(1));
    const Sourced s = ses.egz(g, m);
    rep.add("group", g.name(), "");
    rep.add("m", m, "k exp(G)");
    add_invariant(rep, "s", s, "longest sequence found without a zero-sum m-subsequence, plus one");
    if (!s.res.is_exact()) {
        rep.add_bound("star_graph", {s.res.value, s.res.upper + 1, std::nullopt,
                                     {{"graph star sandwich", "s <= R(K_{1,m}) <= s + 1"}}});
        return kExitInconclusive;
    }
    rep.add_bound("star_graph", corollary_r2_bounds(s.res.value));
    return kExitOk;
}

int cmd_bounds_theoremC(Session&, const Args& a, Report& rep) {
    if (!a.m || !a.t) throw DomainError("the cyclic star formula needs --m and --t");
    rep.add("m", *a.m, kInput);
    rep.add("t", *a.t, kInput);
    rep.add("value", theoremC_value(*a.m, *a.t), "R(K_{1,m}, Z_t) = m + t - 1 if m, t even, else m + t");
    return kExitOk;
}

int cmd_bounds_remark(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int r = need_r(a);
    if (r < 2) throw DomainError("r must be >= 2");
    const int m = resolve_m(g, std::nullopt, a.k ? a.k : std::optional<int>(1));
    const Sourced s = ses.egz(g, m);
    rep.add("group", g.name(), "");
    rep.add("m", m, "k exp(G)");
    rep.add("r", r, kInput);
    add_invariant(rep, "s", s, "longest sequence found without a zero-sum m-subsequence, plus one");
    if (!s.res.is_exact()) return kExitInconclusive;
    const int om = omega(s.res.value, r);
    rep.add("omega", om, "least n with C(n-1, r-1) >= s");
    const auto v = remark_intersecting_value(s.res.value, r);
    rep.add("applies", v.has_value(), "2r > Omega(s) - 1");
    if (v)
        rep.add("intersecting", *v, "R_I = Omega(s) - 1 if C(Omega(s)-1, r) >= s, else Omega(s)");
    else
        rep.add("intersecting", nullptr, "large-r value needs 2r > Omega(s) - 1", "not applicable");
    return kExitOk;
}

void emit_coloring(Report& rep, const std::string& out, const Coloring& c) {
    if (out.empty()) {
        rep.add("coloring", to_json(c), "");
    } else {
        write_json_file(out, to_json(c));
        rep.add("coloring_file", out, "");
    }
}

int cmd_construct_t1(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int r = need_r(a);
    const int k = a.k.value_or(1);
    LowerVariant variant;
    if (a.variant == "minus-two")
        variant = LowerVariant::minus_two;
    else if (a.variant == "minus-one")
        variant = LowerVariant::minus_one;
    else
        throw DomainError("--variant must be minus-two or minus-one");
    const MatchingColoring mc = theorem1_lower_coloring(g, k, r, variant, ses.limits());
    rep.add("group", g.name(), "");
    rep.add("m", k * g.exponent(), "k exp(G)");
    rep.add("r", r, kInput);
    rep.add("s", mc.s, kComputed);
    rep.add("omega", mc.omega, "least n with C(n-1, r-1) >= s");
    rep.add("n", mc.coloring.n(), variant == LowerVariant::minus_two ? "omega - 2" : "omega - 1");
    rep.add("t", mc.t, "ceil(C(n, r) / floor(n / r)) hypermatchings");
    Json pc = Json::array();
    for (int c : mc.part_colors) pc.push_back(element_to_json(g, c));
    rep.add("part_colors", pc, "first t terms of the s_m witness");
    emit_coloring(rep, a.out, mc.coloring);
    return kExitOk;
}

int cmd_construct_delta(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int r = need_r(a);
    if (!a.q || !a.m) throw DomainError("delta-lower needs --q and --m");
    const PotentialColoring pc = delta_lower_coloring(g, r, *a.q, *a.m, ses.limits());
    rep.add("group", g.name(), "");
    rep.add("r", r, kInput);
    rep.add("q", *a.q, kInput);
    rep.add("m", *a.m, kInput);
    rep.add("D", pc.davenport, kComputed);
    rep.add("n", pc.coloring.n(), "(r-q)m + D - 2");
    Json f = Json::array();
    for (int v : pc.potential.values) f.push_back(element_to_json(g, v));
    rep.add("potential", f, "zero-sum free prefix of length D - 1, then 0");
    emit_coloring(rep, a.out, pc.coloring);
    return kExitOk;
}

int cmd_verify_coloring(Session& ses, const Args& a, Report& rep) {
    if (a.file.empty()) throw DomainError("--file is required");
    if (!a.m) throw DomainError("--m is required");
    const Coloring c = coloring_from_json(read_json_file(a.file));
    const FamilySpec spec = FamilySpec::parse(a.kind);
    const FamilySearchResult res = verify_no_zero_sum_family(c, spec, *a.m, ses.limits());
    rep.add("group", c.group().name(), "");
    rep.add("n", c.n(), "coloring file");
    rep.add("r", c.r(), "coloring file");
    rep.add("kind", spec.name(), "");
    rep.add("m", *a.m, kInput);
    switch (res.status) {
        case FamilyStatus::certified_absent: rep.add("result", "certified_absent", "exhaustive search"); break;
        case FamilyStatus::witness_found:
            rep.add("result", "witness_found", "exhaustive search");
            rep.add("witness", to_json(*res.witness), "zero-sum, verified");
            break;
        case FamilyStatus::inconclusive: rep.add("result", "inconclusive", "budget exhausted"); break;
    }
    return res.status == FamilyStatus::inconclusive ? kExitInconclusive : kExitOk;
}

void emit_decomposition(Report& rep, const std::string& out, const Decomposition& d) {
    const DecompositionCheck check = verify_decomposition(d);
    if (!check) throw InternalError("constructed decomposition fails verification: " + check.violation);
    rep.add("parts", static_cast<std::int64_t>(d.parts.size()), kComputed);
    rep.add("verified", true, "partition, sizes and degree window checked");
    if (out.empty()) {
        rep.add("decomposition", to_json(d), "");
    } else {
        write_json_file(out, to_json(d));
        rep.add("decomposition_file", out, "");
    }
}

int cmd_decomp_matchings(Session& ses, const Args& a, Report& rep) {
    if (!a.n) throw DomainError("--n is required");
    const int r = need_r(a);
    const Decomposition d = matching_decomposition(*a.n, r, ses.globals().seed);
    rep.add("n", *a.n, kInput);
    rep.add("r", r, kInput);
    rep.add("t", matching_part_count(*a.n, r), "ceil(C(n, r) / floor(n / r))");
    emit_decomposition(rep, a.out, d);
    return kExitOk;
}

int cmd_decomp_baranyai(Session& ses, const Args& a, Report& rep) {
    if (!a.n) throw DomainError("--n is required");
    const int r = need_r(a);
    if (a.sizes.empty()) throw DomainError("--sizes is required");
    const auto sizes = parse_int_list(a.sizes);
    const Decomposition d = baranyai_partition(*a.n, r, sizes, ses.globals().seed);
    rep.add("n", *a.n, kInput);
    rep.add("r", r, kInput);
    emit_decomposition(rep, a.out, d);
    return kExitOk;
}

int cmd_decomp_verify(Session&, const Args& a, Report& rep) {
    if (a.file.empty()) throw DomainError("--file is required");
    const Decomposition d = decomposition_from_json(read_json_file(a.file));
    const DecompositionCheck check = verify_decomposition(d);
    rep.add("n", d.n, "decomposition file");
    rep.add("r", d.r, "decomposition file");
    rep.add("parts", static_cast<std::int64_t>(d.parts.size()), "decomposition file");
    rep.add("ok", check.ok, "");
    if (!check) {
        rep.add("violation", check.violation, "");
        return kExitDomain;
    }
    return kExitOk;
}

RamseyOptions ramsey_options(const Session& ses, const Args& a) {
    RamseyOptions opt;
    opt.limits = ses.limits();
    opt.n_max = a.nmax.value_or(12);
    opt.n_start = a.nstart;
    opt.star_bound = !a.no_star_bound;
    opt.symmetry = !a.no_symmetry;
    return opt;
}

int cmd_ramsey_exact(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const RamseyQuery q{g, need_r(a), resolve_m(g, a.m, a.k), FamilySpec::parse(a.kind)};
    const RamseyResult res = exact_ramsey(q, ramsey_options(ses, a));
    rep.add("group", g.name(), "");
    rep.add("r", q.r, kInput);
    rep.add("m", q.m, kInput);
    rep.add("kind", q.kind.name(), "");
    add_ramsey(rep, "", res);
    const std::string path = a.cert.empty() ? default_cert_path(q) : a.cert;
    write_json_file(path, to_json(*res.certificate));
    rep.add("certificate", path, "bad coloring of K_" + std::to_string(res.certificate->n()) + ", re-verified");
    rep.add("status", status_name(res.status), "");
    return res.status == SearchStatus::exact ? kExitOk : kExitInconclusive;
}

int cmd_conjecture_probe(Session& ses, const Args& a, Report& rep) {
    const Group g = Group::parse(a.group);
    const int r = need_r(a);
    const ConjectureReport c = conjecture_probe(g, a.k.value_or(1), r, ramsey_options(ses, a));
    rep.add("group", g.name(), "");
    rep.add("m", c.m, "k exp(G)");
    rep.add("r", r, kInput);
    rep.add("s", c.s, kComputed);
    rep.add("omega", c.omega, "least n with C(n-1, r-1) >= s");
    rep.add("hypothesis", c.hypothesis_holds, "r <= (Omega(s) - 1) / 2");
    add_ramsey(rep, "intersecting_", c.intersecting);
    add_ramsey(rep, "hyperstar_", c.hyperstar);
    const char* agreement = c.agreement == Agreement::agree      ? "agree"
                            : c.agreement == Agreement::disagree ? "disagree"
                                                                 : "inconclusive";
    rep.add("agreement", agreement, "comparison of searched values; not a proof");
    return c.agreement == Agreement::inconclusive ? kExitInconclusive : kExitOk;
}

// Grid of groups x k x r, one CSV row each.
int cmd_table_sweep(Session& ses, const Args& a, std::ostream& out) {
    std::vector<Group> groups;
    {
        std::stringstream ss(a.groups);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (!item.empty()) groups.push_back(Group::parse(item));
    }
    const auto ks = parse_int_list(a.ks);
    const auto rs = parse_int_list(a.rs);
    std::vector<std::string> header = {"group",     "k",        "m",     "r",        "D",        "D_source",
                                       "s",         "s_source", "omega", "I_lower",  "I_upper",  "I_exact",
                                       "S_lower",   "S_upper",  "S_exact", "bound_source"};
    if (a.ramsey) {
        for (const char* h : {"R_I_lower", "R_I_upper", "R_S_lower", "R_S_upper", "R_source"}) header.push_back(h);
    }
    const bool json = ses.globals().format == "json";
    Json rows = Json::array();
    if (!json) out << join(header, ",") << '\n';
    int code = kExitOk;
    auto opt_text = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const Group& g : groups)
        for (auto k : ks)
            for (auto r : rs) {
                if (k < 1 || r < 2) throw DomainError("table sweep needs k >= 1 and r >= 2");
                const int m = static_cast<int>(k) * g.exponent();
                const Sourced d = ses.davenport(g);
                const Sourced s = ses.egz(g, m);
                std::vector<std::string> cells = {g.factor_list().empty() ? "1" : g.factor_list(),
                                                  std::to_string(k),
                                                  std::to_string(m),
                                                  std::to_string(r),
                                                  d.res.is_exact() ? std::to_string(d.res.value) : "",
                                                  d.res.is_exact() ? d.provenance : "undetermined"};
                if (s.res.is_exact()) {
                    const StarBounds b = theorem1_bounds(s.res.value, m, static_cast<int>(r));
                    std::vector<std::string> names;
                    for (const auto& p : b.intersecting.provenance) names.push_back(p.name);
                    for (const auto& p : b.hyperstar.provenance)
                        if (std::find(names.begin(), names.end(), p.name) == names.end()) names.push_back(p.name);
                    for (const auto& c :
                         {std::to_string(s.res.value), s.provenance, std::to_string(b.omega),
                          std::to_string(b.intersecting.lower), std::to_string(b.intersecting.upper),
                          opt_text(b.intersecting.exact), std::to_string(b.hyperstar.lower),
                          std::to_string(b.hyperstar.upper), opt_text(b.hyperstar.exact), join(names, "; ")})
                        cells.push_back(c);
                } else {
                    code = kExitInconclusive;
                    for (const auto& c : {std::string(), std::string("undetermined"), std::string(), std::string(),
                                          std::string(), std::string(), std::string(), std::string(), std::string(),
                                          std::string()})
                        cells.push_back(c);
                }
                if (a.ramsey) {
                    RamseyOptions opt = ramsey_options(ses, a);
                    const RamseyResult ri =
                        exact_ramsey({g, static_cast<int>(r), m, {FamilyKind::intersecting, 0}}, opt);
                    const RamseyResult rsr = exact_ramsey({g, static_cast<int>(r), m, {FamilyKind::hyperstar, 0}}, opt);
                    if (ri.exact() && rsr.exact() && *ri.exact() > *rsr.exact())
                        throw InternalError("intersecting value exceeds the hyperstar value for " + g.name());
                    if (!ri.exact() || !rsr.exact()) code = kExitInconclusive;
                    cells.push_back(std::to_string(ri.lower));
                    cells.push_back(opt_text(ri.upper));
                    cells.push_back(std::to_string(rsr.lower));
                    cells.push_back(opt_text(rsr.upper));
                    cells.push_back("exhaustive search");
                }
                if (json) {
                    Json row = Json::object();
                    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = cells[i];
                    rows.push_back(row);
                } else {
                    for (auto& c : cells) c = Report::csv(c);
                    out << join(cells, ",") << '\n';
                }
            }
    if (json) out << rows.dump(2) << '\n';
    return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Globals g;
    if (const char* env = std::getenv("ZSR_CACHE"); env && *env)
        g.cache_path = env;
    else
        g.cache_path = "zsr-cache.json";
    Args a;

    CLI::App app{"Zero-sum invariants, bounds and exact zero-sum Ramsey numbers over finite abelian groups", "zsr"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--cache", g.cache_path, "Invariant cache file (env ZSR_CACHE, default ./zsr-cache.json)");
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the cache");
    app.add_option("--budget", g.budget, "Time limit per search in seconds")->check(CLI::PositiveNumber);
    app.add_option("--nodes", g.nodes, "Node limit per search");
    app.add_option("--seed", g.seed, "Seed for randomized constructions");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

    using Action = std::function<int(Session&, Report&)>;
    Action action;
    bool table_mode = false;

    auto group_opt = [&](CLI::App* c, bool required = true) {
        auto* o = c->add_option("--group", a.group, "Group as a factor list, e.g. 2,12");
        if (required) o->required();
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    int (*fn)(Session&, const Args&, Report&)) {
        CLI::App* c = parent->add_subcommand(name, help);
        c->fallthrough();
        c->callback([&action, &a, fn] { action = [&a, fn](Session& s, Report& r) { return fn(s, a, r); }; });
        return c;
    };
    auto branch = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->fallthrough();
        c->require_subcommand(1);
        return c;
    };

    CLI::App* grp = branch("group", "Group utilities");
    group_opt(leaf(grp, "canon", "Invariant-factor form of a group", cmd_group_canon));

    CLI::App* inv = branch("inv", "Zero-sum invariants");
    group_opt(leaf(inv, "davenport", "Davenport constant D(G)", cmd_inv_davenport));
    {
        CLI::App* c = leaf(inv, "egz", "s_m(G), least length forcing a zero-sum m-subsequence", cmd_inv_egz);
        group_opt(c);
        c->add_option("--m", a.m, "Subsequence length (a multiple of exp(G))");
        c->add_option("--k", a.k, "Use m = k exp(G)");
    }
    group_opt(leaf(inv, "ell", "ell(G)", cmd_inv_ell));

    {
        CLI::App* c = app.add_subcommand("omega", "Least n with C(n-1, r-1) >= s");
        c->fallthrough();
        c->add_option("--s", a.s)->required();
        c->add_option("--r", a.r)->required();
        c->callback([&] { action = [&](Session& s, Report& r) { return cmd_omega(s, a, r); }; });
    }

    CLI::App* bounds = branch("bounds", "Bound formulas");
    {
        CLI::App* c = leaf(bounds, "t1", "Intersecting and hyperstar sandwich", cmd_bounds_t1);
        group_opt(c);
        c->add_option("--k", a.k, "m = k exp(G), default 1");
        c->add_option("--r", a.r)->required();
    }
    {
        CLI::App* c = leaf(bounds, "t2", "Delta-system bounds", cmd_bounds_t2);
        group_opt(c);
        c->add_option("--r", a.r)->required();
        c->add_option("--q", a.q)->required();
        c->add_option("--m", a.m)->required();
    }
    {
        CLI::App* c = leaf(bounds, "corollary", "Star graph bounds (r = 2)", cmd_bounds_corollary);
        group_opt(c);
        c->add_option("--k", a.k, "m = k exp(G), default 1");
    }
    {
        CLI::App* c = leaf(bounds, "theoremC", "R(K_{1,m}, Z_t)", cmd_bounds_theoremC);
        c->add_option("--m", a.m)->required();
        c->add_option("--t", a.t)->required();
    }
    {
        CLI::App* c = leaf(bounds, "remark", "Intersecting value for large r", cmd_bounds_remark);
        group_opt(c);
        c->add_option("--k", a.k, "m = k exp(G), default 1");
        c->add_option("--r", a.r)->required();
    }

    CLI::App* construct = branch("construct", "Lower-bound colorings");
    {
        CLI::App* c = leaf(construct, "t1-coloring", "Hypermatching coloring", cmd_construct_t1);
        group_opt(c);
        c->add_option("--k", a.k, "m = k exp(G), default 1");
        c->add_option("--r", a.r)->required();
        c->add_option("--variant", a.variant, "minus-two (K_{omega-2}) or minus-one (K_{omega-1}, needs r | omega-1)");
        c->add_option("--out", a.out, "Coloring file to write");
    }
    {
        CLI::App* c = leaf(construct, "delta-lower", "Potential coloring for delta-systems", cmd_construct_delta);
        group_opt(c);
        c->add_option("--r", a.r)->required();
        c->add_option("--q", a.q)->required();
        c->add_option("--m", a.m)->required();
        c->add_option("--out", a.out, "Coloring file to write");
    }

    CLI::App* verify = branch("verify", "Verifiers");
    {
        CLI::App* c = leaf(verify, "coloring", "Search a coloring for a zero-sum family", cmd_verify_coloring);
        c->add_option("--file", a.file)->required();
        c->add_option("--kind", a.kind, "hyperstar, intersecting, matching or delta(q)");
        c->add_option("--m", a.m)->required();
    }

    CLI::App* decomp = branch("decomp", "Edge decompositions of K_n^(r)");
    {
        CLI::App* c = leaf(decomp, "matchings", "Partition into hypermatchings", cmd_decomp_matchings);
        c->add_option("--n", a.n)->required();
        c->add_option("--r", a.r)->required();
        c->add_option("--out", a.out, "Decomposition file to write");
    }
    {
        CLI::App* c = leaf(decomp, "baranyai", "Partition into parts of given sizes", cmd_decomp_baranyai);
        c->add_option("--n", a.n)->required();
        c->add_option("--r", a.r)->required();
        c->add_option("--sizes", a.sizes, "Comma-separated part sizes summing to C(n, r)")->required();
        c->add_option("--out", a.out, "Decomposition file to write");
    }
    {
        CLI::App* c = leaf(decomp, "verify", "Check a decomposition file", cmd_decomp_verify);
        c->add_option("--file", a.file)->required();
    }

    auto ramsey_opts = [&](CLI::App* c) {
        c->add_option("--nmax", a.nmax, "Largest vertex count searched (default 12)");
        c->add_option("--nstart", a.nstart, "First vertex count searched");
        c->add_flag("--no-star-bound", a.no_star_bound, "Disable the vertex-star completion bound");
        c->add_flag("--no-symmetry", a.no_symmetry, "Disable vertex-permutation pruning");
    };
    CLI::App* ramsey = branch("ramsey", "Exact zero-sum Ramsey numbers");
    {
        CLI::App* c = leaf(ramsey, "exact", "Exhaustive coloring search", cmd_ramsey_exact);
        group_opt(c);
        c->add_option("--r", a.r)->required();
        c->add_option("--m", a.m, "Family size (a multiple of exp(G))");
        c->add_option("--k", a.k, "Use m = k exp(G)");
        c->add_option("--kind", a.kind, "hyperstar, intersecting, matching or delta(q)");
        c->add_option("--cert", a.cert, "Certificate file (default derived from the query)");
        ramsey_opts(c);
    }

    CLI::App* conj = branch("conjecture", "Intersecting versus hyperstar values");
    {
        CLI::App* c = leaf(conj, "probe", "Compare both values by search", cmd_conjecture_probe);
        group_opt(c);
        c->add_option("--k", a.k, "m = k exp(G), default 1");
        c->add_option("--r", a.r)->required();
        ramsey_opts(c);
    }

    CLI::App* table = branch("table", "Tables");
    {
        CLI::App* c = table->add_subcommand("sweep", "Grid of groups and parameters as CSV");
        c->fallthrough();
        c->add_option("--groups", a.groups, "Semicolon-separated groups, e.g. \"2;3;2,2\"");
        c->add_option("--k", a.ks, "Comma-separated k values");
        c->add_option("--r", a.rs, "Comma-separated r values");
        c->add_flag("--ramsey", a.ramsey, "Also search exact intersecting and hyperstar values");
        ramsey_opts(c);
        c->callback([&] { table_mode = true; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitDomain;
    }

    Session session(g, err);
    try {
        int code;
        if (table_mode) {
            code = cmd_table_sweep(session, a, out);
        } else {
            Report rep;
            code = action(session, rep);
            rep.emit(out, g.format);
        }
        session.flush();
        return code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const Inconclusive& e) {
        err << "inconclusive: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace zsr
