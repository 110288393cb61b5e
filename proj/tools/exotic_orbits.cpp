// Command-line front end: enumeration of the two orbit parameter sets,
// the generic-element orbit correspondence, point classification, and the
// consistency sweep. Text / JSON / LaTeX / CSV output.
//
// Exit codes: 0 ok, 1 check failures, 2 invalid ambient or malformed input,
// 3 genericity (majority) failure, 4 internal consistency mismatch,
// 5 invariant violation of a supplied point.

#include "exotic/checks.hpp"
#include "exotic/correspondence.hpp"
#include "exotic/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace exotic;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitConsistency = 4;
constexpr int kExitInvariant = 5;

struct Format {
    std::string kind = "text"; // text | json | latex | csv
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("EXOTIC_ORBITS_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

std::string label_text(const ExoticOrbitLabel& lab) {
    return "((" + std::to_string(lab.r) + "," + std::to_string(lab.s) + "), " +
           to_string(refine_type(lab)) + ")";
}

int cmd_enumerate(const std::string& space, const Ambient& amb, const Format& fmt) {
    std::ostream& out = std::cout;
    if (space == "cone") {
        const auto labels = enumerate_pi2k(amb);
        if (fmt.kind == "json") {
            json arr = json::array();
            for (const auto& lab : labels) {
                json j = label_to_json(lab);
                j["dim"] = dim_exotic_orbit(lab);
                arr.push_back(std::move(j));
            }
            out << arr.dump(2) << "\n";
        } else if (fmt.kind == "csv") {
            out << "p,q,k,r,s,type,dim\n";
            for (const auto& lab : labels)
                out << amb.p << "," << amb.q << "," << amb.k << "," << lab.r << "," << lab.s
                    << "," << to_string(refine_type(lab)) << "," << dim_exotic_orbit(lab)
                    << "\n";
        } else if (fmt.kind == "latex") {
            for (const auto& lab : labels)
                out << render_striped_diagram(lab, RenderFormat::latex) << "  % "
                    << label_text(lab) << "\n";
        } else {
            out << "Pi_2^k for p=" << amb.p << " q=" << amb.q << " k=" << amb.k << ": "
                << labels.size() << " orbits\n";
            for (const auto& lab : labels) {
                out << "\n" << label_text(lab) << "  dim=" << dim_exotic_orbit(lab) << "\n";
                out << render_striped_diagram(lab, RenderFormat::ascii) << "\n";
            }
        }
    } else { // grassmannian
        const auto tableaux = enumerate_theta2k(amb);
        if (fmt.kind == "json") {
            json arr = json::array();
            for (const auto& t : tableaux)
                arr.push_back(tableau_to_json(t));
            out << arr.dump(2) << "\n";
        } else if (fmt.kind == "csv") {
            out << "p,q,k,n1,n2,ell,mark\n";
            for (const auto& t : tableaux)
                out << amb.p << "," << amb.q << "," << amb.k << "," << t.n1 << "," << t.n2
                    << "," << t.ell << "," << t.mark << "\n";
        } else if (fmt.kind == "latex") {
            for (const auto& t : tableaux)
                out << render_tableau(t, RenderFormat::latex) << "\n";
        } else {
            out << "Theta_2^k for p=" << amb.p << " q=" << amb.q << " k=" << amb.k << ": "
                << tableaux.size() << " orbits\n";
            for (const auto& t : tableaux)
                out << render_tableau(t, RenderFormat::ascii) << "\n";
        }
    }
    return kExitOk;
}

int cmd_correspond(const Ambient& amb, std::uint64_t seed, unsigned samples, long bound,
                   bool parallel, const Format& fmt) {
    CorrespondenceOptions opts;
    opts.samples = samples;
    opts.bound = bound;
    opts.parallel = parallel;
    const CorrespondenceTable table = full_correspondence(amb, seed, opts);
    const bool bijective = check_bijectivity_criterion(amb, table);
    if (table.escalated)
        std::cerr << "warning: majority vote needed a bound escalation\n";

    std::ostream& out = std::cout;
    if (fmt.kind == "json") {
        out << table_to_json(table).dump(2) << "\n";
    } else if (fmt.kind == "csv") {
        out << "p,q,k,n1,n2,ell,mark,r,s,type,lambda\n";
        for (const auto& e : table.entries) {
            out << amb.p << "," << amb.q << "," << amb.k << "," << e.tableau.n1 << ","
                << e.tableau.n2 << "," << e.tableau.ell << "," << e.tableau.mark << ","
                << e.label.r << "," << e.label.s << "," << to_string(refine_type(e.label))
                << ",";
            const auto& parts = e.good_lam.parts();
            for (std::size_t i = 0; i < parts.size(); ++i)
                out << (i ? " " : "") << parts[i];
            out << "\n";
        }
    } else if (fmt.kind == "latex") {
        out << "\\begin{tabular}{c|c|c}\n";
        out << "$(\\tau,i)$ & $\\phi(\\tau,i)$ & $\\lambda$ \\\\\n\\hline\n";
        for (const auto& e : table.entries)
            out << render_tableau(e.tableau, RenderFormat::latex) << " & "
                << render_striped_diagram(e.label, RenderFormat::latex) << " & $"
                << e.good_lam.to_string() << "$ \\\\\n";
        out << "\\end{tabular}\n";
    } else {
        out << "phi: Theta_2^k -> Pi_2^k for p=" << amb.p << " q=" << amb.q
            << " k=" << amb.k << " (seed=" << seed << ")\n";
        for (const auto& e : table.entries)
            out << render_tableau(e.tableau, RenderFormat::ascii) << " -> "
                << label_text(e.label) << "  lambda=" << e.good_lam.to_string() << "\n";
        out << "\nfibers:\n";
        for (const auto& f : table.fibers) {
            out << label_text(f.label) << " <- {";
            for (std::size_t i = 0; i < f.preimage.size(); ++i)
                out << (i ? ", " : "")
                    << render_tableau(f.preimage[i], RenderFormat::ascii);
            out << "}\n";
        }
        out << "bijective: " << (bijective ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_classify(const std::string& path, const Format& fmt) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitBadInput;
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitBadInput;
    }
    const std::string kind = j.value("kind", "");
    if (kind == "exotic_point") {
        const ExoticOrbitLabel lab = classify_exotic_point(exotic_point_from_json(j));
        if (fmt.kind == "json")
            std::cout << label_to_json(lab).dump(2) << "\n";
        else if (fmt.kind == "latex")
            std::cout << render_striped_diagram(lab, RenderFormat::latex) << "\n";
        else {
            std::cout << label_text(lab) << "\n"
                      << render_striped_diagram(lab, RenderFormat::ascii) << "\n";
        }
        return kExitOk;
    }
    if (kind == "flag_pair") {
        const MarkedTableau t = classify_flag_pair(flag_pair_from_json(j));
        if (fmt.kind == "json")
            std::cout << tableau_to_json(t).dump(2) << "\n";
        else if (fmt.kind == "latex")
            std::cout << render_tableau(t, RenderFormat::latex) << "\n";
        else
            std::cout << render_tableau(t, RenderFormat::ascii) << "\n";
        return kExitOk;
    }
    std::cerr << "error: input must have kind 'exotic_point' or 'flag_pair'\n";
    return kExitBadInput;
}

int cmd_check(unsigned max_n, std::uint64_t seed) {
    if (max_n < 2) {
        std::cerr << "error: --max-n must be >= 2\n";
        return kExitBadInput;
    }
    const SweepReport report = run_check_sweep(max_n, seed, &std::cout);
    std::cerr << "elapsed: " << report.elapsed_seconds << " s\n";
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-orbit parameter sets of the exotic Grassmannian and exotic nilpotent "
                 "cone, and the orbit correspondence between them"};
    app.require_subcommand(1);

    int p = 1, q = 0, k = 0;
    long long seed_flag = -1;
    unsigned samples = 25;
    long bound = 1000;
    bool parallel = false;
    Format fmt;
    std::string space, input_path;
    unsigned max_n = 6;

    auto add_ambient = [&](CLI::App* cmd) {
        cmd->add_option("-p", p, "dim V1 (>= 1)")->required();
        cmd->add_option("-q", q, "dim V2 (>= 0)")->required();
        cmd->add_option("-k", k, "Grassmannian parameter")->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", fmt.kind, "text|json|latex|csv")
            ->check(CLI::IsMember({"text", "json", "latex", "csv"}));
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "List orbit parameters");
    enumerate->add_option("space", space, "cone | grassmannian")
        ->required()
        ->check(CLI::IsMember({"cone", "grassmannian"}));
    add_ambient(enumerate);
    add_format(enumerate);

    CLI::App* correspond = app.add_subcommand("correspond", "Compute the orbit map phi");
    add_ambient(correspond);
    correspond->add_option("--seed", seed_flag, "RNG seed (default 0 or EXOTIC_ORBITS_SEED)");
    correspond->add_option("--samples", samples, "samples per majority vote (default 25)");
    correspond->add_option("--bound", bound, "sampling bound B (default 1000)");
    correspond->add_flag("--parallel", parallel, "compute labels in parallel");
    add_format(correspond);

    CLI::App* classify = app.add_subcommand("classify", "Classify a point from JSON");
    classify->add_option("input", input_path, "JSON file (exotic_point or flag_pair)")
        ->required();
    add_format(classify);

    CLI::App* check = app.add_subcommand("check", "Run the invariant sweep");
    check->add_option("--max-n", max_n, "largest n = p+q to sweep (>= 2)")->required();
    check->add_option("--seed", seed_flag, "RNG seed (default 0 or EXOTIC_ORBITS_SEED)");

    CLI11_PARSE(app, argc, argv);

    const std::uint64_t seed =
        seed_flag >= 0 ? static_cast<std::uint64_t>(seed_flag) : default_seed();

    try {
        if (enumerate->parsed() || correspond->parsed()) {
            if (p < 1 || q < 0 || k < 0 || k > p + q) {
                std::cerr << "error: invalid ambient (need p >= 1, q >= 0, 0 <= k <= p+q)\n";
                return kExitBadInput;
            }
            const Ambient amb(static_cast<unsigned>(p), static_cast<unsigned>(q),
                              static_cast<unsigned>(k));
            if (enumerate->parsed())
                return cmd_enumerate(space, amb, fmt);
            return cmd_correspond(amb, seed, samples, bound, parallel, fmt);
        }
        if (classify->parsed())
            return cmd_classify(input_path, fmt);
        if (check->parsed())
            return cmd_check(max_n, seed);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const GenericityError& e) {
        std::cerr << "genericity failure: " << e.what() << "\n";
        return kExitGenericity;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
