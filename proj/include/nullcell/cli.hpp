#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nullcell/derived.hpp"
#include "nullcell/fixtures.hpp"
#include "nullcell/serialize.hpp"

namespace nullcell {
namespace cli {

struct CommandResult {
    int code = 0;
    std::string out;
    std::string err;
};

namespace detail {

inline std::string join_dims(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

inline AlgebraPtr resolve_algebra(const std::string& source) {
    namespace fs = std::filesystem;
    if (fs::exists(source)) return load_algebra(source);
    std::string bundled = "fixtures/" + source + ".alg";
    if (fs::exists(bundled)) return load_algebra(bundled);
    try {
        return fixtures::by_name(source);
    } catch (const input_error&) {
        throw input_error("algebra '" + source +
                          "': no such file and no such fixture (known fixtures: f3s3, ut2_f2, "
                          "f2z2, f3xf3)");
    }
}

inline Module resolve_module(const std::string& source, AlgebraPtr alg) {
    namespace fs = std::filesystem;
    if (source == "regular") return regular_module(alg);
    if (fs::exists(source)) return load_module(source, alg);
    std::string bundled = "fixtures/" + source + ".mod";
    if (fs::exists(bundled)) return load_module(bundled, alg);
    throw input_error("module '" + source + "': expected 'regular', a file path, or a bundled fixture name");
}

struct Job {
    std::string algebra_source;
    std::string module_source = "regular";
    std::vector<std::size_t> torsion;
    std::size_t max_degree = 10;
    u64 seed = 0;
    std::string format = "table";
    std::string construction = "I";

    bool json() const { return format == "json"; }
};

inline void render_stage_table(std::ostringstream& os, const NullResult& r) {
    os << "stages (n dim_M dim_t dim_I):\n";
    for (std::size_t n = 0; n < r.stages.size(); ++n)
        os << "  " << n << ' ' << r.stages[n].dim_m << ' ' << r.stages[n].dim_t << ' '
           << r.stages[n].dim_i << '\n';
}

inline nlohmann::json stages_json(const NullResult& r) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& st : r.stages)
        stages.push_back({{"dim_M", st.dim_m}, {"dim_t", st.dim_t}, {"dim_I", st.dim_i}});
    return stages;
}

inline int cmd_simples(const Job& job, std::ostringstream& os) {
    auto alg = resolve_algebra(job.algebra_source);
    auto list = simple_modules(alg, job.seed);
    if (job.json()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < list.count(); ++i)
            rows.push_back({{"index", i},
                            {"dim", list.reps[i].dim},
                            {"hull_dim", list.hulls[i].dim},
                            {"cover_dim", list.covers[i].dim}});
        os << nlohmann::json{{"simples", rows}}.dump(2) << '\n';
    } else {
        os << "index dim hull_dim cover_dim\n";
        for (std::size_t i = 0; i < list.count(); ++i)
            os << i << ' ' << list.reps[i].dim << ' ' << list.hulls[i].dim << ' '
               << list.covers[i].dim << '\n';
    }
    return 0;
}

inline int cmd_cell(const Job& job, std::ostringstream& os) {
    auto alg = resolve_algebra(job.algebra_source);
    auto m = resolve_module(job.module_source, alg);
    auto simples = std::make_shared<const SimpleList>(simple_modules(alg, job.seed));
    auto theory = make_torsion_theory(simples, job.torsion);
    auto dims = cell_cohomology(theory, m, job.max_degree);
    if (job.json())
        os << nlohmann::json{{"cell_cohomology", dims}}.dump(2) << '\n';
    else
        os << join_dims(dims) << '\n';
    return 0;
}

inline int cmd_nullify(const Job& job, std::ostringstream& os) {
    auto alg = resolve_algebra(job.algebra_source);
    auto m = resolve_module(job.module_source, alg);
    auto simples = std::make_shared<const SimpleList>(simple_modules(alg, job.seed));
    auto theory = make_torsion_theory(simples, job.torsion);
    NullRoute route = job.construction == "J" ? NullRoute::Quotients : NullRoute::Radical;
    auto r = nullification(theory, m, job.max_degree, route);
    if (job.json()) {
        nlohmann::json j;
        if (route == NullRoute::Radical) j["cell_cohomology"] = r.cell_dims;
        j["null_cohomology"] = r.cohomology_dims;
        j["stages"] = stages_json(r);
        os << j.dump(2) << '\n';
    } else {
        os << "null_cohomology: " << join_dims(r.cohomology_dims) << '\n';
        if (route == NullRoute::Radical) os << "cell_cohomology: " << join_dims(r.cell_dims) << '\n';
        render_stage_table(os, r);
        if (auto per = detect_periodicity(theory, r, job.seed))
            os << "periodicity (heuristic): preperiod " << per->first << ", period " << per->second
               << '\n';
    }
    return 0;
}

inline int cmd_quotients(const Job& job, std::ostringstream& os) {
    auto alg = resolve_algebra(job.algebra_source);
    auto m = resolve_module(job.module_source, alg);
    auto simples = std::make_shared<const SimpleList>(simple_modules(alg, job.seed));
    auto theory = make_torsion_theory(simples, job.torsion);
    auto qr = module_of_quotients(theory, m);
    if (job.json())
        os << nlohmann::json{{"dim_M", m.dim},
                             {"dim_MF", qr.mf.dim},
                             {"kernel_dim", qr.kernel_dim},
                             {"cokernel_dim", qr.cokernel_dim}}
                  .dump(2)
           << '\n';
    else
        os << "dim_M: " << m.dim << "\ndim_MF: " << qr.mf.dim << "\nkernel_dim: " << qr.kernel_dim
           << "\ncokernel_dim: " << qr.cokernel_dim << '\n';
    return 0;
}

inline int cmd_verify_ext(const Job& job, std::ostringstream& os) {
    auto alg = resolve_algebra(job.algebra_source);
    auto m = resolve_module(job.module_source, alg);
    auto simples = std::make_shared<const SimpleList>(simple_modules(alg, job.seed));
    auto theory = make_torsion_theory(simples, job.torsion);
    auto rep = verify_double_endomorphism(theory, m, job.max_degree, job.seed);
    if (job.json()) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"degree", c.degree}, {"cell", c.lhs}, {"ext_shifted", c.rhs},
                              {"pass", c.pass()}});
        os << nlohmann::json{{"cell", rep.cell},
                             {"ext", rep.ext},
                             {"h0", {{"null", rep.h0.lhs}, {"ext0", rep.h0.rhs}, {"pass", rep.h0.pass()}}},
                             {"checks", checks},
                             {"pass", rep.pass()}}
                  .dump(2)
           << '\n';
    } else {
        os << "cell: " << join_dims(rep.cell) << '\n';
        os << "ext:  " << join_dims(rep.ext) << '\n';
        for (const auto& c : rep.checks)
            os << "degree " << c.degree << ": cell " << c.lhs << " vs ext " << c.rhs << " -> "
               << (c.pass() ? "ok" : "MISMATCH") << '\n';
        os << "h0: null " << rep.h0.lhs << " vs ext " << rep.h0.rhs << " -> "
           << (rep.h0.pass() ? "ok" : "MISMATCH") << '\n';
        os << (rep.pass() ? "PASS" : "FAIL") << '\n';
    }
    return rep.pass() ? 0 : 1;
}

inline int cmd_verify_completion(const Job& job, std::ostringstream& os) {
    auto alg = resolve_algebra(job.algebra_source);
    auto m = resolve_module(job.module_source, alg);
    auto simples = std::make_shared<const SimpleList>(simple_modules(alg, job.seed));
    auto theory = make_torsion_theory(simples, job.torsion);
    auto rep = verify_completion(theory, m, job.max_degree, job.seed);
    if (job.json()) {
        os << nlohmann::json{{"completion", rep.completion},
                             {"null_cohomology", rep.null_dims},
                             {"pass", rep.pass()}}
                  .dump(2)
           << '\n';
    } else {
        os << "completion: " << join_dims(rep.completion) << '\n';
        os << "null:       " << join_dims(rep.null_dims) << '\n';
        os << (rep.pass() ? "PASS" : "FAIL") << '\n';
    }
    return rep.pass() ? 0 : 1;
}

inline int cmd_oracle_check(const Job& job, std::ostringstream& os) {
    auto alg = resolve_algebra(job.algebra_source);
    auto m = resolve_module(job.module_source, alg);
    auto simples = std::make_shared<const SimpleList>(simple_modules(alg, job.seed));
    auto theory = make_torsion_theory(simples, job.torsion);
    auto fast = torsion_radical(theory, m);
    auto slow = torsion_radical_oracle(theory, m, job.seed);
    bool match = fast.space == slow.space;
    if (job.json()) {
        os << nlohmann::json{{"radical_dim", fast.dim()},
                             {"oracle_dim", slow.dim()},
                             {"match", match}}
                  .dump(2)
           << '\n';
    } else {
        os << "radical_dim: " << fast.dim() << '\n';
        os << "oracle_dim: " << slow.dim() << '\n';
        os << (match ? "PASS" : "FAIL") << '\n';
    }
    return match ? 0 : 1;
}

}  // namespace detail

// Parses and executes one invocation. Never throws: input problems come
// back as exit code 2 with a message on err.
inline CommandResult run_command(const std::vector<std::string>& args) {
    using detail::Job;
    CLI::App app{"cellular approximation and nullification over finite-dimensional algebras"};
    app.require_subcommand(1);

    Job job;
    std::string torsion_csv;

    auto add_common = [&](CLI::App* sub, bool needs_module) {
        sub->add_option("--algebra", job.algebra_source,
                        "algebra file or fixture name (f3s3, ut2_f2, f2z2, f3xf3)")
            ->required();
        sub->add_option("--seed", job.seed, "random seed (default 0)");
        sub->add_option("--format", job.format, "output format")
            ->check(CLI::IsMember({"table", "json"}));
        if (needs_module) {
            sub->add_option("--module", job.module_source, "module file, fixture name, or 'regular'");
            sub->add_option("--torsion-simples", torsion_csv,
                            "comma-separated simple indices generating the torsion class");
            sub->add_option("--max-degree", job.max_degree, "top cohomological degree (default 10)");
        }
    };

    auto* simples = app.add_subcommand("simples", "list the simple modules with hull and cover dimensions");
    add_common(simples, false);
    auto* cell = app.add_subcommand("cell", "cellular approximation cohomology table");
    add_common(cell, true);
    auto* nullify = app.add_subcommand("nullify", "nullification complex cohomology and stage diagnostics");
    add_common(nullify, true);
    nullify->add_option("--construction", job.construction, "iteration variant")
        ->check(CLI::IsMember({"I", "J"}));
    auto* quotients = app.add_subcommand("quotients", "module of quotients and unit kernel/cokernel");
    add_common(quotients, true);
    auto* vext = app.add_subcommand("verify-ext", "check the double-endomorphism Ext formula");
    add_common(vext, true);
    auto* vcomp = app.add_subcommand("verify-completion", "check the completion formula");
    add_common(vcomp, true);
    auto* oracle = app.add_subcommand("oracle-check", "torsion radical vs the cyclic-submodule oracle");
    add_common(oracle, true);

    std::vector<const char*> argv;
    argv.push_back("nullcell");
    for (const auto& a : args) argv.push_back(a.c_str());

    CommandResult res;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os, es;
        if (e.get_exit_code() == 0) {
            // --help and friends
            os << app.help();
            res.out = os.str();
            return res;
        }
        es << e.what() << '\n';
        res.err = es.str();
        res.code = 2;
        return res;
    }

    if (!torsion_csv.empty()) {
        std::stringstream ss(torsion_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                job.torsion.push_back(std::stoul(tok));
            } catch (const std::exception&) {
                res.err = "invalid --torsion-simples entry '" + tok + "'\n";
                res.code = 2;
                return res;
            }
        }
    }

    std::ostringstream os;
    try {
        if (simples->parsed()) res.code = detail::cmd_simples(job, os);
        else if (cell->parsed()) res.code = detail::cmd_cell(job, os);
        else if (nullify->parsed()) res.code = detail::cmd_nullify(job, os);
        else if (quotients->parsed()) res.code = detail::cmd_quotients(job, os);
        else if (vext->parsed()) res.code = detail::cmd_verify_ext(job, os);
        else if (vcomp->parsed()) res.code = detail::cmd_verify_completion(job, os);
        else if (oracle->parsed()) res.code = detail::cmd_oracle_check(job, os);
    } catch (const input_error& e) {
        res.err = std::string(e.what()) + '\n';
        res.code = 2;
        return res;
    } catch (const std::exception& e) {
        res.err = std::string("internal error: ") + e.what() + '\n';
        res.code = 2;
        return res;
    }
    res.out = os.str();
    return res;
}

}  // namespace cli
}  // namespace nullcell
