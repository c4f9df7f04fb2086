#pragma once

// Command-line front end. Single answers go to stdout as JSON or a bare
// scalar; ranges go out as CSV. Exit status: 0 ok, 1 domain error, 2 usage.

#include <fibpart/fibpart.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibpart::cli {

/// Bad command-line input; reported with exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using nlohmann::json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
inline json number(const Natural& n) {
    if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
    if (n < 0 && n >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(n);
    return n.str();
}

inline json coefficient_list(const IntPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(number(c));
    return out;
}

inline Natural natural_arg(const std::string& token, std::optional<std::size_t> limit_bits) {
    Natural n;
    try {
        n = parse_natural(token);
    } catch (const std::invalid_argument&) {
        throw UsageError("expected a nonnegative integer, got '" + token + "'");
    }
    if (limit_bits && bit_length(n) > *limit_bits) {
        throw UsageError("input '" + token + "' exceeds --limit-bits " + std::to_string(*limit_bits));
    }
    return n;
}

inline std::uint64_t small_arg(const std::string& token, std::uint64_t min_value) {
    const Natural n = natural_arg(token, std::nullopt);
    if (n < min_value || n > std::numeric_limits<std::uint32_t>::max()) {
        throw UsageError("argument '" + token + "' out of range");
    }
    return static_cast<std::uint64_t>(n);
}

inline Word word_arg(const std::string& token) {
    try {
        return parse_word(token);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

inline std::vector<OrbitGenerator> generators_arg(const std::string& list) {
    std::vector<OrbitGenerator> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "omega" || tok == "w" || tok == "ω") out.push_back(OrbitGenerator::omega);
        else if (tok == "tau" || tok == "t" || tok == "τ") out.push_back(OrbitGenerator::tau);
        else if (tok == "S" || tok == "s") out.push_back(OrbitGenerator::S);
        else throw UsageError("unknown generator '" + tok + "'");
    }
    if (out.empty()) throw UsageError("empty generator list");
    return out;
}

inline json output_record(const Natural& n, bool with_poly) {
    json rec;
    rec["n"] = number(n);
    json z = json::array();
    for (int i : zeckendorf(n)) z.push_back(i);
    rec["zeckendorf"] = z;
    rec["word"] = format_word(word_of(n));
    rec["F"] = number(count_F(n));
    rec["chi"] = chi(n);
    if (with_poly) rec["poly"] = coefficient_list(fib_poly(n));
    rec["essential"] = is_essential(n);
    return rec;
}

inline json point_list(const std::vector<GraphPoint>& pts) {
    json out = json::array();
    for (const auto& [x, y] : pts) out.push_back(json::array({number(x), number(y)}));
    return out;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using detail::json;
    using detail::number;

    CLI::App app{"Fibonacci partition counting, words and essential numbers", "fibpart"};
    app.require_subcommand(1);
    std::size_t limit_bits = 128;
    app.add_option("--limit-bits", limit_bits, "Reject inputs wider than this many bits (closed-form commands ignore it)");

    std::string arg1, arg2, apply_list, chi_method = "reduction", run_kind = "all";
    bool no_poly = false, all_words = false;

    auto* info = app.add_subcommand("info", "Zeckendorf form, word, F, chi, polynomial of N as JSON");
    info->add_option("N", arg1)->required();
    info->add_flag("--no-poly", no_poly, "Omit the polynomial");
    auto* poly = app.add_subcommand("poly", "Coefficients of F(N;t), lowest degree first");
    poly->add_option("N", arg1)->required();
    auto* chi_cmd = app.add_subcommand("chi", "chi(N) = F(N;-1)");
    chi_cmd->add_option("N", arg1)->required();
    chi_cmd->add_option("--method", chi_method, "reduction | fractions | poly")
        ->check(CLI::IsMember({"reduction", "fractions", "poly"}));
    auto* word = app.add_subcommand("word", "The word pi(N)");
    word->add_option("N", arg1)->required();
    auto* theta_cmd = app.add_subcommand("theta", "Least n whose word is WORD");
    theta_cmd->add_option("WORD", arg1)->required();
    auto* essential = app.add_subcommand("essential", "Whether N is essential, and its index m");
    essential->add_option("N", arg1)->required();
    auto* orbit = app.add_subcommand("orbit", "Apply generators omega, tau, S left to right");
    orbit->add_option("N", arg1)->required();
    orbit->add_option("--apply", apply_list, "Comma-separated list, e.g. omega,S,tau")->required();
    auto* psi_cmd = app.add_subcommand("psi", "Psi(K), the number of essential K-numbers");
    psi_cmd->add_option("K", arg1)->required();
    auto* psi_sigma_cmd = app.add_subcommand("psi-sigma", "Psi_Sigma(K), commutative essential K-numbers");
    psi_sigma_cmd->add_option("K", arg1)->required();
    auto* enumerate = app.add_subcommand("enumerate", "Sorted essential K-numbers");
    enumerate->add_option("K", arg1)->required();
    auto* minimal = app.add_subcommand("minimal", "M(K), the least n with F(n) = K, and its word");
    minimal->add_option("K", arg1)->required();
    minimal->add_flag("--all-words", all_words, "Search every word instead of letter multisets");
    auto* stability = app.add_subcommand("stability", "L_R(K) = #{f_R <= n < f_{R+1} : F(n) = K}");
    stability->add_option("R", arg1)->required();
    stability->add_option("K", arg2)->required();
    auto* zeros = app.add_subcommand("zeros", "Zeros of chi in [1,N] and X(N)");
    zeros->add_option("N", arg1)->required();
    auto* runs = app.add_subcommand("runs", "Maximal chi runs over [LO,HI] as CSV");
    runs->add_option("LO", arg1)->required();
    runs->add_option("HI", arg2)->required();
    runs->add_option("--kind", run_kind, "zero | nonzero | all")->check(CLI::IsMember({"zero", "nonzero", "all"}));
    auto* hull = app.add_subcommand("hull", "Predicted vs computed upper hull of F over [f_R-1, f_{R+1}-1]");
    hull->add_option("R", arg1)->required();
    auto* plot = app.add_subcommand("plot", "CSV rows n,F,chi for LO <= n <= HI");
    plot->add_option("LO", arg1)->required();
    plot->add_option("HI", arg2)->required();
    auto* oracle_check = app.add_subcommand("oracle-check", "Compare F(n;t) with brute force for n <= N");
    oracle_check->add_option("N", arg1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const std::optional<std::size_t> limit = limit_bits;
    auto nat = [&](const std::string& s) { return detail::natural_arg(s, limit); };

    try {
        if (info->parsed()) {
            out << detail::output_record(nat(arg1), !no_poly).dump() << "\n";
        } else if (poly->parsed()) {
            out << detail::coefficient_list(fib_poly(nat(arg1))).dump() << "\n";
        } else if (chi_cmd->parsed()) {
            const Natural n = nat(arg1);
            const int v = chi_method == "poly"        ? chi_via_poly(n)
                          : chi_method == "fractions" ? chi_via_fractions(n)
                                                      : chi_via_reduction(n);
            out << v << "\n";
        } else if (word->parsed()) {
            out << format_word(word_of(nat(arg1))) << "\n";
        } else if (theta_cmd->parsed()) {
            out << theta(detail::word_arg(arg1)) << "\n";
        } else if (essential->parsed()) {
            const Natural n = nat(arg1);
            json rec{{"n", number(n)}, {"essential", is_essential(n)}, {"m", nullptr}};
            if (is_essential(n)) rec["m"] = number(m_from_essential(n));
            out << rec.dump() << "\n";
        } else if (orbit->parsed()) {
            const auto gens = detail::generators_arg(apply_list);
            Natural n = nat(arg1);
            json rec{{"n", number(n)}, {"steps", json::array()}};
            for (auto g : gens) {
                n = act(g, n);
                rec["steps"].push_back({{"generator", std::string(name(g))}, {"n", number(n)}});
            }
            out << rec.dump() << "\n";
        } else if (psi_cmd->parsed()) {
            out << psi(detail::small_arg(arg1, 1)) << "\n";
        } else if (psi_sigma_cmd->parsed()) {
            out << psi_sigma(detail::small_arg(arg1, 1)) << "\n";
        } else if (enumerate->parsed()) {
            const auto cls = list_essential(detail::small_arg(arg1, 1));
            for (std::size_t i = 0; i < cls.members.size(); ++i) out << (i ? " " : "") << cls.members[i];
            out << "\n";
        } else if (minimal->parsed()) {
            const auto k = detail::small_arg(arg1, 1);
            const auto best =
                minimal_essential_with_word(k, all_words ? MinimalSearch::all_words : MinimalSearch::commutative);
            json rec{{"k", k},
                     {"M", number(best.value)},
                     {"word", format_word(best.word)},
                     {"primitive", k == 1 || is_f_prime(best.value)}};
            out << rec.dump() << "\n";
        } else if (stability->parsed()) {
            const auto r = detail::small_arg(arg1, 1);
            const auto k = detail::small_arg(arg2, 1);
            out << stability_count(static_cast<int>(r), k) << "\n";
        } else if (zeros->parsed()) {
            const Natural n = nat(arg1);
            const Natural z = count_zero_chi(n);
            json rec{{"N", number(n)}, {"zeros", number(z)}, {"X", number(n - z)}};
            out << rec.dump() << "\n";
        } else if (runs->parsed()) {
            const Natural lo = nat(arg1), hi = nat(arg2);
            if (!(lo < hi)) throw UsageError("runs needs LO < HI");
            out << "start,length,kind,interior,values\n";
            for (const auto& r : chi_runs(lo, hi)) {
                const bool zero = r.kind == RunKind::zero;
                if ((run_kind == "zero" && !zero) || (run_kind == "nonzero" && zero)) continue;
                out << r.start << ',' << r.length << ',' << (zero ? "zero" : "nonzero") << ','
                    << (r.interior ? 1 : 0) << ',';
                for (std::size_t i = 0; i < r.values.size(); ++i) out << (i ? ";" : "") << r.values[i];
                out << "\n";
            }
        } else if (hull->parsed()) {
            const auto r = detail::small_arg(arg1, 7);
            const auto predicted = hull_points(static_cast<int>(r));
            const auto computed = computed_hull_points(static_cast<int>(r));
            json rec{{"r", r},
                     {"predicted", detail::point_list(predicted)},
                     {"computed", detail::point_list(computed)},
                     {"match", predicted == computed}};
            out << rec.dump() << "\n";
        } else if (plot->parsed()) {
            const Natural lo = nat(arg1), hi = nat(arg2);
            if (hi < lo) throw UsageError("plot needs LO <= HI");
            out << "n,F,chi\n";
            for (Natural n = lo; n <= hi; ++n) out << n << ',' << count_F(n) << ',' << chi(n) << "\n";
        } else if (oracle_check->parsed()) {
            const Natural bound = nat(arg1);
            const oracle::Config config;
            if (bound > config.max_n) {
                throw std::out_of_range("oracle-check supports N <= " + std::to_string(config.max_n));
            }
            std::uint64_t mismatches = 0;
            json first = nullptr;
            for (Natural n = 0; n <= bound; ++n) {
                if (fib_poly(n) != oracle::brute_poly(n, config)) {
                    if (mismatches++ == 0) first = number(n);
                }
            }
            json rec{{"N", number(bound)},
                     {"checked", number(bound + 1)},
                     {"mismatches", mismatches},
                     {"first_mismatch", first},
                     {"pass", mismatches == 0}};
            out << rec.dump() << "\n";
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace fibpart::cli
