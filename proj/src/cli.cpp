#include "polycss/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polycss/catalog.hpp"
#include "polycss/css.hpp"
#include "polycss/polycyclic.hpp"
#include "polycss/search.hpp"

namespace polycss::cli {
namespace {

using nlohmann::ordered_json;

struct Common {
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::string budget = std::to_string(kDefaultBudget);
    int jobs = 1;
};

std::uint64_t parse_budget(const std::string& text) {
    try {
        std::size_t used = 0;
        if (text.find_first_of("eE.") != std::string::npos) {
            const double v = std::stod(text, &used);
            if (used == text.size() && v >= 1 && v < 1.8e19) return static_cast<std::uint64_t>(v);
        } else {
            const unsigned long long v = std::stoull(text, &used);
            if (used == text.size() && v >= 1) return v;
        }
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidParams, "budget must be a positive count, got '" + text + "'");
}

// FNV-1a over the invocation, so an omitted seed is still a function of the command line.
std::uint64_t invocation_seed(const std::vector<std::string>& args) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& a : args) {
        for (unsigned char c : a) h = (h ^ c) * 1099511628211ull;
        h = (h ^ 0xffu) * 1099511628211ull;
    }
    return h;
}

// "(n,i,a,b)" names the trinomial x^n - a x^i - b; anything else is a polynomial string.
std::string modulus_text(const std::string& text, int q) {
    static const std::regex tuple(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, tuple)) return text;
    const Field field = field_of_order(q);
    auto elem = [&](const std::string& s) {
        const int v = std::stoi(s);
        if (v <= 0 || v >= q) throw Error(ErrorKind::InvalidParams, "trinomial coefficient out of range: " + s);
        return FieldElement(field, static_cast<Elem>(v));
    };
    return format_expression(make_trinomial(std::stoi(m[1]), std::stoi(m[2]), elem(m[3]), elem(m[4])));
}

void load_catalog(Catalog& c, const std::string& path, std::ostream& err) {
    if (path.empty()) return;
    if (!std::filesystem::exists(path)) throw Error(ErrorKind::Io, "catalog not found: " + path);
    const IngestResult r = c.ingest_file(path);
    for (const auto& d : r.rejected) err << path << ":" << d.line << ": rejected: " << d.message << "\n";
}

void add_common(CLI::App* app, Common& c) {
    app->add_flag("--json", c.json, "Machine-readable output");
    app->add_option("--seed", c.seed, "Random seed (derived from the invocation when omitted)");
    app->add_option("--budget", c.budget, "Enumeration budget in word visits")->capture_default_str();
    app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
}

std::vector<int> parse_int_list(const std::vector<std::string>& items) {
    std::vector<int> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(std::stoi(part));
    }
    return out;
}

struct SearchArgs {
    int q = 0;
    std::optional<int> n, n_min, n_max, k;
    int i_min = 1, i_max = -1;
    std::vector<std::string> a, b;
    int g_min = 1, g_max = -1;
    std::vector<std::string> moduli;
    int trials = 8;
    std::optional<int> time_limit_ms;
    std::string db;
    std::string out;
};

void add_search_options(CLI::App* s, SearchArgs& a, bool trinomial_filters) {
    s->add_option("--q", a.q, "Field order")->required();
    s->add_option("--n", a.n, "Single length");
    s->add_option("--n-min", a.n_min, "Smallest length");
    s->add_option("--n-max", a.n_max, "Largest length");
    s->add_option("--g-min", a.g_min, "Smallest degree of g")->capture_default_str();
    s->add_option("--g-max", a.g_max, "Largest degree of g (-1: n - 1)")->capture_default_str();
    s->add_option("--time-limit", a.time_limit_ms, "Per-candidate time limit in milliseconds");
    s->add_option("--db", a.db, "Catalog whose records hits must beat");
    s->add_option("--out", a.out, "Write the catalog with the hits merged to this path");
    if (trinomial_filters) {
        s->add_option("--i-min", a.i_min, "Smallest middle exponent")->capture_default_str();
        s->add_option("--i-max", a.i_max, "Largest middle exponent (-1: n - 1)")->capture_default_str();
        s->add_option("--a", a.a, "Values of a, comma separated (default: all nonzero)");
        s->add_option("--b", a.b, "Values of b, comma separated (default: all nonzero)");
        s->add_option("--trinomial", a.moduli, "Explicit modulus, symbolic or (n,i,a,b); repeatable");
    }
}

SearchConfig make_config(const SearchArgs& a, const Common& c, std::uint64_t seed) {
    SearchConfig cfg;
    cfg.q = a.q;
    cfg.n_min = a.n_min.value_or(a.n.value_or(0));
    cfg.n_max = a.n_max.value_or(a.n.value_or(cfg.n_min));
    cfg.i_min = a.i_min;
    cfg.i_max = a.i_max;
    cfg.a_values = parse_int_list(a.a);
    cfg.b_values = parse_int_list(a.b);
    cfg.g_degree_min = a.g_min;
    cfg.g_degree_max = a.g_max;
    for (const auto& m : a.moduli) cfg.moduli.push_back(modulus_text(m, a.q));
    cfg.trials = a.trials;
    cfg.budget = parse_budget(c.budget);
    cfg.seed = seed;
    cfg.jobs = c.jobs;
    cfg.time_limit_ms = a.time_limit_ms;
    return cfg;
}

class Runner {
public:
    Runner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
        : args_(args), out_(out), err_(err) {}

    int run() {
        CLI::App app{"Quantum CSS codes from polycyclic codes"};
        app.require_subcommand(1);
        app.fallthrough();
        add_common(&app, common_);

        // factor
        auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial over GF(q)");
        int f_q = 0;
        std::string f_poly;
        factor_cmd->add_option("--q", f_q, "Field order")->required();
        factor_cmd->add_option("--poly", f_poly, "Polynomial, symbolic or table notation")->required();

        // code
        auto* code_cmd = app.add_subcommand("code", "Build a polycyclic code and report [n,k,d]");
        int c_q = 0;
        std::string c_t, c_g;
        std::optional<int> c_n;
        bool c_span = false, c_dual = false;
        code_cmd->add_option("--q", c_q, "Field order")->required();
        code_cmd->add_option("--t", c_t, "Modulus x^n - v(x), symbolic, table or (n,i,a,b)")->required();
        code_cmd->add_option("--g", c_g, "Generator polynomial")->required();
        code_cmd->add_option("--n", c_n, "Length for --span (default: deg t)");
        code_cmd->add_flag("--span", c_span, "Use the span of the shifts of g instead of the ideal");
        code_cmd->add_flag("--dual", c_dual, "Report the Euclidean dual instead");

        // css verify
        auto* css_cmd = app.add_subcommand("css", "CSS constructions");
        css_cmd->require_subcommand(1);
        auto* verify_cmd = css_cmd->add_subcommand("verify", "Re-verify a table row from its strings");
        RowInput row;
        std::string v_t, v_conv;
        verify_cmd->add_option("--q", row.q, "Field order")->required();
        verify_cmd->add_option("--t", v_t, "Modulus, symbolic, table or (n,i,a,b)")->required();
        verify_cmd->add_option("--g1", row.g1, "Generator of C1")->required();
        verify_cmd->add_option("--second", row.second, "Second polynomial of the row")->required();
        verify_cmd->add_option("--n", row.n, "Claimed length");
        verify_cmd->add_option("--k", row.k, "Claimed dimension");
        verify_cmd->add_option("--d", row.d, "Claimed distance");
        verify_cmd->add_option("--convention", v_conv, "C2 or C2perp (default: both)")
            ->check(CLI::IsMember({"C2", "C2perp"}));

        // search
        auto* search_cmd = app.add_subcommand("search", "Search for new codes");
        search_cmd->require_subcommand(1);
        SearchArgs sa;
        auto* s_tri = search_cmd->add_subcommand("trinomial", "Divisor pairs of trinomials");
        add_search_options(s_tri, sa, true);
        auto* s_target = search_cmd->add_subcommand("target", "Random f of fixed degree k");
        add_search_options(s_target, sa, true);
        s_target->add_option("--k", sa.k, "Target dimension")->required();
        s_target->add_option("--trials", sa.trials, "Draws per divisor g")->capture_default_str();
        auto* s_multi = search_cmd->add_subcommand("multinomial", "Random moduli x^n - v(x)");
        add_search_options(s_multi, sa, false);
        s_multi->add_option("--trials", sa.trials, "Random moduli per length")->capture_default_str();
        s_multi->add_option("--modulus", sa.moduli, "Explicit modulus; repeatable");
        auto* s_derive = search_cmd->add_subcommand("derive", "Propagation closure over a catalog");
        std::string d_db, d_out, d_rules = "E,P,subcode,DS,Thm2";
        int d_rounds = 1;
        std::optional<int> d_q;
        s_derive->add_option("--db", d_db, "Catalog to start from")->required();
        s_derive->add_option("--out", d_out, "Write the closed catalog to this path");
        s_derive->add_option("--rules", d_rules, "Comma-separated rules among E,P,subcode,DS,Thm2")
            ->capture_default_str();
        s_derive->add_option("--rounds", d_rounds, "Maximum rounds")->check(CLI::NonNegativeNumber)->capture_default_str();
        s_derive->add_option("--q", d_q, "Restrict to one field order");

        // db
        auto* db_cmd = app.add_subcommand("db", "Best-known code catalog");
        db_cmd->require_subcommand(1);
        std::string db_path = "catalog.json";
        auto add_db = [&](CLI::App* s) {
            s->add_option("--db", db_path, "Catalog file (.json or .csv)")->capture_default_str();
        };
        auto* db_ingest = db_cmd->add_subcommand("ingest", "Merge files into the catalog");
        add_db(db_ingest);
        std::vector<std::string> ingest_files;
        db_ingest->add_option("files", ingest_files, "JSON or CSV files")->required()->check(CLI::ExistingFile);

        auto* db_query = db_cmd->add_subcommand("query", "Look up records");
        add_db(db_query);
        int qy_q = 0, qy_n = 0;
        std::optional<int> qy_k, qy_d, qy_n_max, qy_d_max;
        db_query->add_option("--q", qy_q, "Field order")->required();
        db_query->add_option("--n", qy_n, "Length (lower end with --n-max)")->required();
        db_query->add_option("--k", qy_k, "Dimension, for an exact lookup");
        db_query->add_option("--d", qy_d, "Minimum distance");
        db_query->add_option("--n-max", qy_n_max, "Upper end of the length range");
        db_query->add_option("--d-max", qy_d_max, "Upper end of the distance range");

        auto* db_update = db_cmd->add_subcommand("update", "Insert a record if it is better");
        add_db(db_update);
        CatalogRecord up;
        std::vector<std::string> up_witness;
        db_update->add_option("--q", up.q, "Field order")->required();
        db_update->add_option("--n", up.n, "Length")->required();
        db_update->add_option("--k", up.k, "Dimension")->required();
        db_update->add_option("--d", up.d, "Distance")->required();
        db_update->add_option("--label", up.label, "Alphabet label (default q^2)");
        db_update->add_option("--ref", up.ref, "Reference");
        db_update->add_option("--witness", up_witness, "key=value; repeatable");

        auto* db_export = db_cmd->add_subcommand("export", "Write the catalog to a file");
        add_db(db_export);
        std::string ex_out, ex_format;
        db_export->add_option("--out", ex_out, "Destination")->required();
        db_export->add_option("--format", ex_format, "json or csv (default: by extension)")
            ->check(CLI::IsMember({"json", "csv"}));

        std::vector<std::string> reversed(args_.rbegin(), args_.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? kExitOk : kExitUsage;
        }

        try {
            if (*factor_cmd) return do_factor(f_q, f_poly);
            if (*code_cmd) return do_code(c_q, c_t, c_g, c_n, c_span, c_dual);
            if (*verify_cmd) {
                row.modulus = modulus_text(v_t, row.q);
                if (!v_conv.empty()) row.convention = parse_convention(v_conv);
                row.enumeration.budget = parse_budget(common_.budget);
                row.enumeration.jobs = common_.jobs;
                row.enumeration.seed = seed();
                return do_verify(row);
            }
            if (*s_tri || *s_target || *s_multi) return do_search(sa, *s_tri ? 0 : *s_target ? 1 : 2);
            if (*s_derive) return do_derive(d_db, d_out, d_rules, d_rounds, d_q);
            if (*db_ingest) return do_ingest(db_path, ingest_files);
            if (*db_query) return do_query(db_path, qy_q, qy_n, qy_k, qy_d, qy_n_max, qy_d_max);
            if (*db_update) return do_update(db_path, up, up_witness);
            if (*db_export) return do_export(db_path, ex_out, ex_format);
        } catch (const BudgetExceeded& e) {
            err_ << "error: " << e.what() << "\n";
            return kExitBudget;
        } catch (const Error& e) {
            err_ << "error: " << e.what() << "\n";
            return e.kind() == ErrorKind::TimeLimit ? kExitBudget : kExitUsage;
        } catch (const std::invalid_argument& e) {
            err_ << "error: invalid number: " << e.what() << "\n";
            return kExitUsage;
        } catch (const std::out_of_range& e) {
            err_ << "error: number out of range: " << e.what() << "\n";
            return kExitUsage;
        }
        return kExitUsage;
    }

private:
    std::uint64_t seed() {
        if (!seed_) {
            seed_ = common_.seed ? *common_.seed : invocation_seed(args_);
            if (!common_.seed) err_ << "seed: " << *seed_ << "\n";
        }
        return *seed_;
    }

    int do_factor(int q, const std::string& text) {
        const Field field = field_of_order(q);
        const Poly p = parse_poly_any(text, field);
        const Factorization fact = factor(p, seed_.value_or(common_.seed.value_or(0)));
        if (common_.json) {
            ordered_json j;
            j["q"] = q;
            j["poly"] = format_expression(p);
            j["unit"] = static_cast<int>(fact.unit.index());
            j["factors"] = ordered_json::array();
            for (const auto& f : fact.factors)
                j["factors"].push_back({{"factor", format_expression(f.factor)},
                                        {"table", poly_format(f.factor)},
                                        {"multiplicity", f.multiplicity}});
            out_ << j.dump() << "\n";
            return kExitOk;
        }
        out_ << format_expression(p) << " over GF(" << q << "): " << fact.factors.size() << " distinct factors";
        if (fact.unit.index() != 1) out_ << ", unit " << static_cast<int>(fact.unit.index());
        out_ << "\n";
        for (const auto& f : fact.factors)
            out_ << "  " << format_expression(f.factor) << "  [" << poly_format(f.factor) << "]"
                 << (f.multiplicity > 1 ? "  ^" + std::to_string(f.multiplicity) : std::string()) << "\n";
        return kExitOk;
    }

    int do_code(int q, const std::string& t_text, const std::string& g_text, std::optional<int> n, bool span,
                bool want_dual) {
        const Field field = field_of_order(q);
        const AmbientRing ring = AmbientRing::from_modulus(parse_poly_any(modulus_text(t_text, q), field));
        const Poly g = parse_poly_any(g_text, field);
        LinearCode c = span ? span_code(g, n.value_or(ring.length())) : ideal_code(g, ring);
        if (want_dual) c = dual(c);
        EnumOptions opts;
        opts.budget = parse_budget(common_.budget);
        opts.jobs = common_.jobs;
        opts.seed = seed_.value_or(common_.seed.value_or(0));
        std::optional<DistanceResult> dr;
        if (c.dimension() > 0) dr = min_distance(c, opts);
        const bool closed = !span || (c.length() == ring.length() && is_shift_closed(c, ring.v()));
        if (common_.json) {
            ordered_json j;
            j["q"] = q;
            j["n"] = c.length();
            j["k"] = c.dimension();
            j["d"] = dr ? ordered_json(dr->d) : ordered_json(nullptr);
            j["d_exact"] = dr ? dr->exact : true;
            j["d_upper"] = dr && dr->upper > 0 ? ordered_json(dr->upper) : ordered_json(nullptr);
            j["method"] = dr ? dr->method : "";
            j["polycyclic"] = closed;
            out_ << j.dump() << "\n";
        } else {
            out_ << "[" << c.length() << "," << c.dimension();
            if (dr) out_ << "," << dr->d;
            out_ << "]_" << q;
            if (dr) {
                out_ << "  " << dr->method << (dr->exact ? " (exact)" : " (lower bound)");
                if (!dr->exact && dr->upper > 0) out_ << ", upper bound " << dr->upper;
            }
            out_ << (closed ? "" : "  not polycyclic") << "\n";
        }
        return dr && !dr->exact ? kExitBudget : kExitOk;
    }

    int do_verify(const RowInput& row) {
        const RowReport report = verify_table_row(row);
        out_ << (common_.json ? report.to_json() + "\n" : report.to_text());
        if (!report.matched()) return kExitMismatch;
        const RowAttempt* b = report.best_attempt();
        return b->params && !b->params->d_exact ? kExitBudget : kExitOk;
    }

    void emit(const SearchHit& h) { out_ << (common_.json ? h.to_json() : h.to_row()) << "\n"; }

    void report_stats(const SearchStats& s) {
        for (const auto& line : s.log) err_ << "note: " << line << "\n";
        err_ << "moduli " << s.moduli << ", candidates " << s.candidates << ", evaluated " << s.evaluated
             << ", hits " << s.hits << "\n";
    }

    int do_search(const SearchArgs& a, int mode) {
        const SearchConfig cfg = make_config(a, common_, seed());
        Catalog catalog;
        load_catalog(catalog, a.db, err_);
        std::vector<SearchHit> hits;
        auto sink = [&](const SearchHit& h) {
            emit(h);
            hits.push_back(h);
        };
        SearchStats stats;
        if (mode == 0) {
            stats = search_trinomial_pairs(cfg, catalog, sink);
        } else if (mode == 1) {
            if (!a.n) throw Error(ErrorKind::InvalidParams, "target search needs --n");
            stats = search_target(cfg, *a.n, *a.k, catalog, sink);
        } else {
            stats = search_multinomial(cfg, catalog, sink);
        }
        report_stats(stats);
        if (!a.out.empty()) {
            for (const auto& h : hits) {
                QuantumParams p = h.params;
                catalog.update_if_better(record_from_params(p));
            }
            catalog.export_file(a.out);
        }
        return kExitOk;
    }

    int do_derive(const std::string& db, const std::string& out, const std::string& rules_text, int rounds,
                  std::optional<int> q) {
        std::set<Rule> rules;
        std::stringstream ss(rules_text);
        for (std::string part; std::getline(ss, part, ',');) {
            if (part.empty()) continue;
            const auto r = parse_rule(part);
            if (!r) throw Error(ErrorKind::InvalidParams, "unknown rule '" + part + "'");
            rules.insert(*r);
        }
        Catalog catalog;
        load_catalog(catalog, db, err_);
        const SearchStats stats = derive_closure(catalog, rules, rounds, [&](const SearchHit& h) { emit(h); }, q);
        report_stats(stats);
        if (!out.empty()) catalog.export_file(out);
        return kExitOk;
    }

    int do_ingest(const std::string& db, const std::vector<std::string>& files) {
        Catalog catalog;
        if (std::filesystem::exists(db)) load_catalog(catalog, db, err_);
        ordered_json summary = ordered_json::array();
        for (const auto& f : files) {
            const IngestResult r = catalog.ingest_file(f);
            for (const auto& d : r.rejected) err_ << f << ":" << d.line << ": rejected: " << d.message << "\n";
            if (common_.json) {
                ordered_json rejected = ordered_json::array();
                for (const auto& d : r.rejected) rejected.push_back({{"line", d.line}, {"message", d.message}});
                summary.push_back(
                    {{"file", f}, {"loaded", r.loaded}, {"accepted", r.accepted}, {"rejected", rejected}});
            } else {
                out_ << f << ": " << r.accepted << " accepted, " << r.loaded << " new or improved, "
                     << r.rejected.size() << " rejected\n";
            }
        }
        catalog.export_file(db);
        if (common_.json)
            out_ << ordered_json{{"db", db}, {"records", catalog.size()}, {"files", summary}}.dump() << "\n";
        else
            out_ << db << ": " << catalog.size() << " records\n";
        return kExitOk;
    }

    void print_records(const std::vector<CatalogRecord>& recs) {
        if (common_.json) {
            out_ << "[";
            for (std::size_t i = 0; i < recs.size(); ++i) out_ << (i ? "," : "") << record_to_json(recs[i]);
            out_ << "]\n";
            return;
        }
        for (const auto& r : recs) {
            out_ << "[[" << r.n << "," << r.k << "," << r.d << "]]_" << r.label;
            if (r.mds) out_ << "  mds";
            if (!r.ref.empty()) out_ << "  " << r.ref;
            out_ << "\n";
        }
        if (recs.empty()) out_ << "no records\n";
    }

    int do_query(const std::string& db, int q, int n, std::optional<int> k, std::optional<int> d,
                 std::optional<int> n_max, std::optional<int> d_max) {
        Catalog catalog;
        load_catalog(catalog, db, err_);
        std::vector<CatalogRecord> recs;
        if (k) {
            if (auto r = catalog.query_exact(q, n, *k); r && (!d || r->d >= *d)) recs.push_back(*r);
        } else if (n_max || d_max) {
            recs = catalog.query_range(q, n, n_max.value_or(n), d.value_or(1), d_max.value_or(kCatalogMaxLength));
        } else if (d) {
            recs = catalog.query_by_distance(q, n, *d);
        } else {
            recs = catalog.query_range(q, n, n, 1, kCatalogMaxLength);
        }
        print_records(recs);
        return kExitOk;
    }

    int do_update(const std::string& db, CatalogRecord rec, const std::vector<std::string>& witness) {
        Catalog catalog;
        if (std::filesystem::exists(db)) load_catalog(catalog, db, err_);
        if (rec.label.empty()) rec.label = default_label(rec.q);
        rec.mds = rec.n - rec.k - 2 * (rec.d - 1) == 0;
        if (!witness.empty()) {
            Witness w;
            for (const auto& kv : witness) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw Error(ErrorKind::InvalidParams, "witness entries are key=value, got '" + kv + "'");
                w[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            rec.witness = std::move(w);
        }
        const auto before = catalog.query_exact(rec.q, rec.n, rec.k);
        const Verdict v = catalog.update_if_better(rec);
        if (v != Verdict::Dominated) catalog.export_file(db);
        if (common_.json) {
            ordered_json j;
            j["verdict"] = to_string(v);
            j["record"] = ordered_json::parse(record_to_json(rec));
            j["previous_d"] = before ? ordered_json(before->d) : ordered_json(nullptr);
            out_ << j.dump() << "\n";
        } else {
            out_ << to_string(v) << " [[" << rec.n << "," << rec.k << "," << rec.d << "]]_" << rec.label;
            if (before) out_ << " (stored d = " << before->d << ")";
            out_ << "\n";
        }
        return kExitOk;
    }

    int do_export(const std::string& db, const std::string& out, const std::string& format) {
        Catalog catalog;
        load_catalog(catalog, db, err_);
        const CatalogFormat f = format.empty() ? format_for(out)
                                : format == "csv"  ? CatalogFormat::Csv
                                                   : CatalogFormat::Json;
        const std::size_t count = catalog.export_file(out, f);
        if (common_.json)
            out_ << ordered_json{{"path", out}, {"records", count}}.dump() << "\n";
        else
            out_ << count << " records written to " << out << "\n";
        return kExitOk;
    }

    const std::vector<std::string>& args_;
    std::ostream& out_;
    std::ostream& err_;
    Common common_;
    std::optional<std::uint64_t> seed_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Runner(args, out, err).run();
}

}  // namespace polycss::cli
