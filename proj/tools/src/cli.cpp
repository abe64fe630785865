#include "nakarig_cli/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nakarig/acceptance.hpp"
#include "nakarig/arith_chain.hpp"
#include "nakarig/errors.hpp"
#include "nakarig/gen_cogen.hpp"
#include "nakarig/quiver.hpp"
#include "nakarig/render.hpp"
#include "nakarig/resolution.hpp"
#include "nakarig/search.hpp"

namespace nakarig::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Thrown for bad flag values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    int m = 0;
    std::string n_range;
    std::string m_range;
    bool json = false;
    bool tsv = false;
    std::optional<int> t;
    std::optional<int> delta;
    std::string family;
    std::optional<std::string> members;
    std::optional<std::string> vertex;
    int max_bits = SearchConfig{}.max_bits;
    bool prune_rotation = false;
    bool rd_prefilter = false;
    int threads = 0;
    std::string out_file;
    std::string format = "ascii";
    std::string render_file;
    std::vector<int> criteria;
};

ordered_json ext_json(ExtNat v) {
    if (v.is_infinite()) {
        return "inf";
    }
    return v.value();
}

ordered_json vertex_json(const Vertex& v) { return ordered_json::array({v.x, v.t}); }

ordered_json vertices_json(const std::vector<Vertex>& vs) {
    auto arr = ordered_json::array();
    for (const Vertex& v : vs) {
        arr.push_back(vertex_json(v));
    }
    return arr;
}

AlgebraParams params_of(const Options& o) { return AlgebraParams::make(o.n, o.m); }

Vertex parse_vertex(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("expected a vertex as x:t, got '" + text + "'");
    }
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw UsageError("expected a vertex as x:t, got '" + text + "'");
        }
        return v;
    };
    const std::string_view sv{text};
    return Vertex{parse_int(sv.substr(0, colon)), static_cast<int>(parse_int(sv.substr(colon + 1)))};
}

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
    auto parse_int = [&](std::string_view part) {
        int v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw UsageError(std::string{flag} + " expects LO..HI or a single value, got '" + text + "'");
        }
        return v;
    };
    const std::string_view sv{text};
    const auto dots = sv.find("..");
    if (dots == std::string_view::npos) {
        const int v = parse_int(sv);
        return {v, v};
    }
    return {parse_int(sv.substr(0, dots)), parse_int(sv.substr(dots + 2))};
}

/// The set named by --members or --family (Lambda alone when neither is given).
GenCogenSet selected_set(const Options& o) {
    const AlgebraParams a = params_of(o);
    if (o.members && !o.family.empty()) {
        throw UsageError("--members and --family are mutually exclusive");
    }
    if (!o.family.empty()) {
        if (!o.t) {
            throw UsageError("--family needs --t");
        }
        const int delta = o.delta ? *o.delta : standard_delta(a);
        return o.family == "S" ? family_S(*o.t, delta, a) : family_N(*o.t, delta, a);
    }
    if (o.members) {
        return parse_members(*o.members, a);
    }
    return GenCogenSet{a};
}

SearchConfig search_config(const Options& o) {
    SearchConfig cfg;
    cfg.max_bits = o.max_bits;
    cfg.prune_rotation = o.prune_rotation;
    cfg.rd_prefilter = o.rd_prefilter;
    cfg.threads = o.threads;
    return cfg;
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f{o.out_file, std::ios::binary};
    if (!f) {
        throw UsageError("cannot open --out file '" + o.out_file + "'");
    }
    f << text;
}

// --- subcommands -----------------------------------------------------------

int cmd_rd(const Options& o, std::ostream& out) {
    const AlgebraParams a = params_of(o);
    a.require_m_at_least_n();
    std::vector<int> layers;
    if (o.t) {
        layers.push_back(*o.t);
    } else {
        for (int t = 1; t < a.m; ++t) {
            layers.push_back(t);
        }
    }
    auto arr = ordered_json::array();
    for (const int t : layers) {
        const std::int64_t closed = rd_closed_form(t, a);
        const Vertex v[] = {Vertex{0, t}};
        const ExtNat direct = rd_pair(v, v, a);
        if (o.json) {
            arr.push_back({{"t", t}, {"closed", closed}, {"direct", ext_json(direct)}});
        } else {
            if (!o.t) {
                out << "t=" << t << ": ";
            }
            out << closed << " (closed) / " << direct.to_string() << " (direct)\n";
        }
    }
    if (o.json) {
        out << ordered_json{{"n", a.n}, {"m", a.m}, {"layers", arr}}.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_rigdim(const Options& o, std::ostream& out) {
    const AlgebraParams a = params_of(o);
    a.require_m_at_least_n();
    const ExtNat value = rigdim_formula(a);
    const EuclidChain c = euclid_chain(a);
    if (o.json) {
        ordered_json j{{"n", a.n}, {"m", a.m}, {"rigdim", ext_json(value)}};
        j["k"] = c.k;
        j["s"] = c.s;
        j["F"] = c.fib;
        j["d"] = c.d;
        out << j.dump(2) << '\n';
    } else {
        out << value.to_string() << '\n' << to_string(c) << '\n';
    }
    return kExitOk;
}

ordered_json mdim_entry(const Vertex& v, const MdimOutcome& d) {
    ordered_json e{{"vertex", vertex_json(v)}, {"mdim", ext_json(d.as_ext())}};
    if (!d.is_finite()) {
        e["cycle"] = vertices_json(d.cycle_witness());
    }
    return e;
}

int cmd_mdim(const Options& o, std::ostream& out) {
    const GenCogenSet M = selected_set(o);
    const AlgebraParams& a = M.params();
    MdimMemo memo{M};
    auto arr = ordered_json::array();
    if (o.vertex) {
        const Vertex v = canonicalize(parse_vertex(*o.vertex), a);
        if (!v.is_stable(a)) {
            throw UsageError("--vertex must be a stable vertex (1 <= t <= m-1)");
        }
        arr.push_back(mdim_entry(v, mdim(v, M, memo)));
    } else {
        for (int i = 0; i < a.stable_count(); ++i) {
            const Vertex v = stable_vertex(i, a);
            arr.push_back(mdim_entry(v, mdim(v, M, memo)));
        }
    }
    ordered_json j{{"n", a.n}, {"m", a.m}, {"members", vertices_json(M.members())}, {"mdim", arr}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_gldim(const Options& o, std::ostream& out) {
    const GenCogenSet M = selected_set(o);
    const GldimReport g = gldim_end(M);
    if (o.json) {
        ordered_json j{{"n", M.params().n},
                       {"m", M.params().m},
                       {"members", vertices_json(M.members())},
                       {"gldim", ext_json(g.value)},
                       {"at_most_two", g.at_most_two},
                       {"max_mdim", g.value.is_finite() ? ordered_json(g.max_mdim) : ordered_json("inf")}};
        out << j.dump(2) << '\n';
    } else {
        out << g.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_resolve(const Options& o, std::ostream& out) {
    const GenCogenSet M = selected_set(o);
    const AlgebraParams& a = M.params();
    std::vector<Vertex> targets;
    if (o.vertex) {
        const Vertex v = canonicalize(parse_vertex(*o.vertex), a);
        if (!v.is_stable(a)) {
            throw UsageError("--vertex must be a stable vertex (1 <= t <= m-1)");
        }
        targets.push_back(v);
    } else {
        for (int i = 0; i < a.stable_count(); ++i) {
            targets.push_back(stable_vertex(i, a));
        }
    }
    MdimMemo memo{M};
    std::vector<RenderOverlay> overlays;
    auto arr = ordered_json::array();
    for (const Vertex& v : targets) {
        ordered_json e{{"vertex", vertex_json(v)}};
        if (M.contains(v)) {
            e["in_add_M"] = true;
        } else {
            const ApproxResult r = min_approximation(v, M);
            e["in_add_M"] = false;
            e["approximation"] = vertices_json(r.approx_summands);
            e["syzygy"] = vertices_json(r.syzygy_summands);
            auto chain = ordered_json::array();
            std::vector<Vertex> layer{v};
            for (int depth = 0; depth < a.stable_count() + 1 && !layer.empty(); ++depth) {
                std::vector<Vertex> next;
                for (const Vertex& u : layer) {
                    const std::vector<Vertex> om = omega_M(u, M);
                    next.insert(next.end(), om.begin(), om.end());
                }
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                if (!next.empty()) {
                    chain.push_back(vertices_json(next));
                }
                layer = std::move(next);
            }
            e["omega_M_powers"] = chain;
            overlays.push_back(RenderOverlay{v, r});
        }
        e["mdim"] = ext_json(mdim(v, M, memo).as_ext());
        arr.push_back(e);
    }
    if (!o.render_file.empty()) {
        std::ofstream f{o.render_file, std::ios::binary};
        if (!f) {
            throw UsageError("cannot open --render file '" + o.render_file + "'");
        }
        f << render_svg(M, overlays);
    }
    ordered_json j{{"n", a.n}, {"m", a.m}, {"members", vertices_json(M.members())}, {"resolutions", arr}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_brute(const Options& o, std::ostream& out) {
    const RigdimReport r = brute_force_rigdim(params_of(o), search_config(o));
    if (o.json) {
        out << to_json(r) << '\n';
        return kExitOk;
    }
    out << "rigdim " << (r.brute_value ? r.brute_value->to_string() : "none") << " (formula "
        << r.formula_value.to_string() << (r.agrees() ? ", agrees" : ", DISAGREES") << ")\n";
    if (r.best_witness) {
        out << "witness " << to_json(r.best_witness->set) << " rd " << r.best_witness->rd.to_string() << " gldim "
            << r.best_witness->gldim.to_string() << '\n';
    }
    out << "subsets " << r.subsets_examined;
    if (r.finite_gldim_subsets) {
        out << ", finite gldim " << *r.finite_gldim_subsets;
    }
    out << ", " << r.elapsed.count() << " ms\n";
    out << "dominant dimension taken as rd(M)+2; End(M) is never constructed\n";
    return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const WitnessCheck w = verify_witness(params_of(o));
    if (o.json) {
        out << to_json(w) << '\n';
    } else {
        out << (w.passed ? "pass" : "FAIL") << ": " << to_string(w.recipe.family);
        if (w.recipe.family != WitnessFamily::Auslander) {
            out << "(t=" << w.recipe.t << ", delta=" << w.recipe.delta << ")";
        }
        out << " rd " << w.rd.to_string() << " gldim " << w.gldim.to_string() << " rigdim " << w.formula.to_string()
            << '\n';
    }
    return w.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
    bool all = true;
    run_acceptance(o.criteria, [&](const CriterionResult& r) {
        all = all && r.passed;
        out << to_string(r) << '\n' << std::flush;
    });
    return all ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const auto [n_lo, n_hi] = parse_range(o.n_range, "--n");
    const auto [m_lo, m_hi] = parse_range(o.m_range, "--m");
    if (n_lo < 1 || n_lo > n_hi || m_lo > m_hi) {
        throw UsageError("--n and --m must be non-empty ranges with n >= 1");
    }
    const std::vector<SweepRow> rows = sweep(n_lo, n_hi, m_lo, m_hi, search_config(o));
    if (o.json && !o.tsv) {
        auto arr = ordered_json::array();
        for (const SweepRow& r : rows) {
            arr.push_back({{"n", r.params.n},
                           {"m", r.params.m},
                           {"k_0", r.k0},
                           {"d", r.d},
                           {"formula", ext_json(r.formula)},
                           {"brute", r.brute ? ext_json(*r.brute) : ordered_json(nullptr)},
                           {"witness_rd", r.witness_rd ? ext_json(*r.witness_rd) : ordered_json(nullptr)},
                           {"subsets", r.subsets},
                           {"millis", r.millis}});
        }
        write_output(o, arr.dump(2) + "\n", out);
    } else {
        write_output(o, to_tsv(rows), out);
    }
    return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
    const GenCogenSet M = selected_set(o);
    write_output(o, o.format == "svg" ? render_svg(M) : render_ascii(M), out);
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rigidity dimensions of self-injective Nakayama algebras A(n,m)", "nakarig"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "nakarig 0.1.0");
    Options o;

    auto add_nm = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of simple modules")->required()->check(CLI::PositiveNumber);
        sub->add_option("--m", o.m, "Loewy length")->required()->check(CLI::PositiveNumber);
    };
    auto add_set = [&](CLI::App* sub) {
        sub->add_option("--members", o.members, "stable members as \"x:t,x:t,...\"");
        sub->add_option("--family", o.family, "named family S or N")->check(CLI::IsMember({"S", "N"}));
        sub->add_option("--t", o.t, "family parameter t");
        sub->add_option("--delta", o.delta, "family gap delta (default max{n,(k_0-1)n})");
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--max-bits", o.max_bits, "refuse searches over more than 2^bits subsets")
            ->check(CLI::Range(0, 62));
        sub->add_flag("--prune-rotation", o.prune_rotation, "evaluate one subset per rotation orbit");
        sub->add_flag("--rd-prefilter", o.rd_prefilter, "skip gldim when rd is below the best so far");
        sub->add_option("--threads", o.threads, "worker threads (default NAKARIG_THREADS or all cores)")
            ->check(CLI::NonNegativeNumber);
    };

    auto* rd = app.add_subcommand("rd", "rigidity degree of layer t: closed form and direct");
    add_nm(rd);
    rd->add_option("--t", o.t, "layer (all layers when omitted)");
    rd->add_flag("--json", o.json);

    auto* rigdim = app.add_subcommand("rigdim", "rigidity dimension from the Euclid chain");
    add_nm(rigdim);
    rigdim->add_flag("--json", o.json);

    auto* mdim_cmd = app.add_subcommand("mdim", "M-dimensions of stable indecomposables (JSON)");
    add_nm(mdim_cmd);
    add_set(mdim_cmd);
    mdim_cmd->add_option("--vertex", o.vertex, "single vertex x:t");
    mdim_cmd->add_flag("--json", o.json, "accepted for symmetry; output is always JSON");

    auto* gldim = app.add_subcommand("gldim", "global dimension of End(M)");
    add_nm(gldim);
    add_set(gldim);
    gldim->add_flag("--json", o.json);

    auto* resolve = app.add_subcommand("resolve", "approximations and Omega_M chains (JSON)");
    add_nm(resolve);
    add_set(resolve);
    resolve->add_option("--vertex", o.vertex, "single vertex x:t");
    resolve->add_option("--render", o.render_file, "also write an SVG with the selection rectangles");
    resolve->add_flag("--json", o.json, "accepted for symmetry; output is always JSON");

    auto* brute = app.add_subcommand("brute", "exhaustive rigidity dimension search");
    add_nm(brute);
    add_search(brute);
    brute->add_flag("--json", o.json);

    auto* witness = app.add_subcommand("witness", "check the attaining generator-cogenerator");
    add_nm(witness);
    witness->add_flag("--json", o.json);

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--criterion", o.criteria, "criterion ids (default all)")->check(CLI::Range(1, 10));

    auto* sweep_cmd = app.add_subcommand("sweep", "formula, exhaustive search and witnesses over a range");
    sweep_cmd->add_option("--n", o.n_range, "n or LO..HI")->required();
    sweep_cmd->add_option("--m", o.m_range, "m or LO..HI")->required();
    add_search(sweep_cmd);
    sweep_cmd->add_flag("--tsv", o.tsv, "tab-separated output (default)");
    sweep_cmd->add_flag("--json", o.json);
    sweep_cmd->add_option("--out", o.out_file, "write to FILE instead of stdout");

    auto* render = app.add_subcommand("render", "draw the stable AR quiver with members marked");
    add_nm(render);
    add_set(render);
    render->add_option("--format", o.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", o.out_file, "write to FILE instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*rd) return cmd_rd(o, out);
        if (*rigdim) return cmd_rigdim(o, out);
        if (*mdim_cmd) return cmd_mdim(o, out);
        if (*gldim) return cmd_gldim(o, out);
        if (*resolve) return cmd_resolve(o, out);
        if (*brute) return cmd_brute(o, out);
        if (*witness) return cmd_witness(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*sweep_cmd) return cmd_sweep(o, out);
        if (*render) return cmd_render(o, out);
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kExitBudget;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedParameters& e) {
        err << "unsupported parameters: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace nakarig::cli
