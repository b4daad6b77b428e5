#pragma once

// Command-line front end. `run` is the whole program; tools/nufact.cpp only
// forwards argv. Exit codes: 0 success, 1 domain error (including exceeded
// caps), 2 usage error (unknown subcommand, bad flag, malformed expression).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nufact/divcalc_svg.hpp"
#include "nufact/json_io.hpp"

namespace nufact::cli {

struct Common {
    bool json = false;
    std::optional<std::uint64_t> cap;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::string length_set_text(const std::set<std::uint64_t>& ls) {
    std::string out = "{";
    bool first = true;
    for (auto l : ls) {
        out += (first ? "" : ",") + std::to_string(l);
        first = false;
    }
    return out + "}";
}

inline std::string factorization_text(const ZFactorization& f) {
    if (f.empty()) return "[]";
    std::string out;
    for (const auto& a : f) out += "(" + text::format_sequence(a) + ")";
    return out;
}

inline std::string quad_factor_text(const QuadInt& x) {
    auto s = text::format_quad(x);
    return (x.a != 0 && x.b != 0) ? "(" + s + ")" : s;
}

inline std::string quad_factorization_text(const QuadFactorization& f) {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t n = 0; n < f.size(); ++n) out += (n ? " * " : "") + quad_factor_text(f[n]);
    return out;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-unique factorization toolkit: zero-sum sequences, quadratic and quaternion examples, "
                 "and the divisor calculus of ideals in triangular orders.",
                 "nufact"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json, "Machine-readable JSON output");
    app.add_option("--cap", common.cap, "Override the enumeration cap of the chosen subcommand");
    app.add_option("--seed", common.seed, "Seed for randomized checks");

    std::function<void()> action;

    // ---- zs ----
    auto* zs = app.add_subcommand("zs", "Zero-sum sequences over a finite abelian group");
    zs->require_subcommand(1);
    std::string group_text, seq_text, g0_text;
    std::uint64_t max_len = 8;
    std::optional<std::uint64_t> seq_cap;
    auto zs_caps = [&] {
        Caps caps;
        if (common.cap) caps.group_order = *common.cap;
        if (seq_cap) caps.sequence_length = *seq_cap;
        return caps;
    };
    auto g0_of = [&](const FinAbGroup& g, const Caps& caps) {
        return g0_text.empty() ? g.enumerate_elements(caps.group_elements) : text::parse_element_set(g, g0_text);
    };
    for (auto* sc : {zs->add_subcommand("atoms", "Minimal zero-sum sequences over G0"),
                     zs->add_subcommand("factor", "All factorizations of a zero-sum sequence"),
                     zs->add_subcommand("lengths", "Length set of a zero-sum sequence"),
                     zs->add_subcommand("davenport", "Davenport constant of the group"),
                     zs->add_subcommand("hfwitness", "Search for a sequence with several factorization lengths")}) {
        sc->add_option("--group", group_text, "Group, e.g. 3 or 2x4")->required();
        sc->add_option("--seq-cap", seq_cap, "Maximum sequence length");
        auto name = sc->get_name();
        if (name == "factor" || name == "lengths") sc->add_option("--seq", seq_text, "Sequence, e.g. \"1^3 2^3\"")->required();
        if (name == "atoms" || name == "hfwitness") sc->add_option("--g0", g0_text, "Subset G0 (default: whole group)");
        if (name == "hfwitness") sc->add_option("--max-len", max_len, "Longest sequence to try");
    }
    zs->get_subcommand("atoms")->callback([&] {
        action = [&] {
            auto g = text::parse_group(group_text);
            auto caps = zs_caps();
            auto g0 = g0_of(g, caps);
            auto list = atoms(g, g0, caps);
            if (common.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& a : list) arr.push_back(json::encode(a));
                out << nlohmann::json{{"group", text::format_group(g)}, {"atoms", arr}}.dump(2) << '\n';
            } else {
                for (const auto& a : list) out << text::format_sequence(a) << '\n';
            }
        };
    });
    zs->get_subcommand("factor")->callback([&] {
        action = [&] {
            auto g = text::parse_group(group_text);
            auto s = text::parse_sequence(g, seq_text);
            auto fs = factorizations(s, zs_caps());
            if (common.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& f : fs) arr.push_back(json::encode(f));
                out << nlohmann::json{{"group", text::format_group(g)}, {"sequence", json::encode(s)}, {"factorizations", arr}}
                           .dump(2)
                    << '\n';
            } else {
                for (const auto& f : fs) out << detail::factorization_text(f) << '\n';
            }
        };
    });
    zs->get_subcommand("lengths")->callback([&] {
        action = [&] {
            auto g = text::parse_group(group_text);
            auto s = text::parse_sequence(g, seq_text);
            auto ls = length_set(s, zs_caps());
            if (common.json)
                out << nlohmann::json{{"sequence", json::encode(s)}, {"lengths", ls}}.dump(2) << '\n';
            else
                out << detail::length_set_text(ls) << '\n';
        };
    });
    zs->get_subcommand("davenport")->callback([&] {
        action = [&] {
            auto g = text::parse_group(group_text);
            auto d = davenport(g, zs_caps());
            if (common.json)
                out << nlohmann::json{{"group", text::format_group(g)}, {"davenport", d}}.dump(2) << '\n';
            else
                out << d << '\n';
        };
    });
    zs->get_subcommand("hfwitness")->callback([&] {
        action = [&] {
            auto g = text::parse_group(group_text);
            auto caps = zs_caps();
            auto g0 = g0_of(g, caps);
            auto w = half_factorial_witness(g, g0, max_len, caps);
            if (common.json) {
                nlohmann::json j{{"group", text::format_group(g)}, {"max_len", max_len}, {"witness", nullptr}};
                if (w) {
                    j["witness"] = json::encode(*w);
                    j["lengths"] = length_set(*w, caps);
                }
                out << j.dump(2) << '\n';
            } else if (w) {
                out << text::format_sequence(*w) << "  lengths " << detail::length_set_text(length_set(*w, caps)) << '\n';
            } else {
                out << "none\n";
            }
        };
    });

    // ---- quad ----
    auto* quad = app.add_subcommand("quad", "Elements of Z[w], w = (1+sqrt(-23))/2");
    quad->require_subcommand(1);
    std::string quad_text;
    std::int64_t max_norm = 30;
    auto quad_caps = [&] {
        Caps caps;
        if (common.cap) caps.norm = *common.cap;
        return caps;
    };
    auto* quad_factor = quad->add_subcommand("factor", "All factorizations into atoms up to associates");
    quad_factor->add_option("element", quad_text, "Element, e.g. 8 or 1+1*w")->required();
    auto* quad_norm = quad->add_subcommand("norm", "Norm a^2 + ab + 6b^2");
    quad_norm->add_option("element", quad_text, "Element")->required();
    auto* quad_atoms = quad->add_subcommand("atoms", "Atoms up to a norm bound (canonical associates)");
    quad_atoms->add_option("--max-norm", max_norm, "Largest norm to scan");
    quad_factor->callback([&] {
        action = [&] {
            auto x = text::parse_quad(quad_text);
            auto caps = quad_caps();
            auto fs = element_factorizations(x, caps);
            std::set<std::uint64_t> lengths;
            for (const auto& f : fs) lengths.insert(f.size());
            if (common.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& f : fs) {
                    nlohmann::json parts = nlohmann::json::array();
                    for (const auto& y : f) parts.push_back(json::encode(y));
                    arr.push_back(parts);
                }
                out << nlohmann::json{{"element", json::encode(x)}, {"norm", norm(x)}, {"factorizations", arr}, {"lengths", lengths}}
                           .dump(2)
                    << '\n';
            } else {
                for (const auto& f : fs) out << detail::quad_factorization_text(f) << '\n';
                out << "lengths " << detail::length_set_text(lengths) << '\n';
            }
        };
    });
    quad_norm->callback([&] {
        action = [&] {
            auto x = text::parse_quad(quad_text);
            if (common.json)
                out << nlohmann::json{{"element", json::encode(x)}, {"norm", norm(x)}}.dump(2) << '\n';
            else
                out << norm(x) << '\n';
        };
    });
    quad_atoms->callback([&] {
        action = [&] {
            auto list = atoms_up_to_norm(max_norm, quad_caps());
            if (common.json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& y : list) arr.push_back({{"element", json::encode(y)}, {"norm", norm(y)}});
                out << nlohmann::json{{"max_norm", max_norm}, {"atoms", arr}}.dump(2) << '\n';
            } else {
                for (const auto& y : list) out << text::format_quad(y) << "  norm " << norm(y) << '\n';
            }
        };
    });

    // ---- quat ----
    auto* quat = app.add_subcommand("quat", "Quaternions over Q(sqrt 3) and the order S");
    quat->require_subcommand(1);
    std::string product_text;
    std::vector<std::string> factor_texts;
    auto* quat_verify = quat->add_subcommand("verify", "Check product = factor1 * factor2 * ... with all terms in S");
    quat_verify->add_option("--product", product_text, "Expected product, e.g. 1-2i+k")->required();
    quat_verify->add_option("factors", factor_texts, "Factors in order")->required();
    quat_verify->callback([&] {
        action = [&] {
            auto product = text::parse_quat(product_text);
            std::vector<QuatQ3> factors;
            for (const auto& f : factor_texts) factors.push_back(text::parse_quat(f));
            QuatQ3 acc = factors.front();
            for (std::size_t n = 1; n < factors.size(); ++n) acc = hmul(acc, factors[n]);
            bool ok = verify_identity(factors, product);
            if (common.json) {
                nlohmann::json members = nlohmann::json::array();
                for (const auto& f : factors) members.push_back(in_S(f));
                out << nlohmann::json{{"verified", ok},
                                      {"computed_product", text::format_quat(acc)},
                                      {"product_in_S", in_S(product)},
                                      {"factors_in_S", members},
                                      {"norm", text::format_sqrtrat(qnorm(product))}}
                           .dump(2)
                    << '\n';
            } else {
                out << (ok ? "true" : "false") << "  product " << text::format_quat(acc) << '\n';
            }
        };
    });

    // ---- div ----
    auto* div = app.add_subcommand("div", "Divisor calculus on tau-cycles of maximal ideals");
    div->require_subcommand(1);
    std::string cycles_text, divisor_text, word_text, out_path;
    std::vector<std::string> divisor_texts;
    std::optional<std::uint64_t> word_max_len;
    std::size_t cycle_index = 0;
    auto* div_compose = div->add_subcommand("compose", "Left-to-right composition D1 o D2 o ...");
    div_compose->add_option("divisors", divisor_texts, "Divisors, e.g. 2Q1+Q3")->required();
    auto* div_real = div->add_subcommand("realizable", "Test D(tau P) >= D(P) - 1 for all P");
    div_real->add_option("divisor", divisor_text, "Divisor")->required();
    auto* div_factor = div->add_subcommand("factor", "Words of maximal ideals composing to D");
    div_factor->add_option("divisor", divisor_text, "Divisor")->required();
    div_factor->add_option("--max-len", word_max_len, "Longest word (default: total count + cycle lengths)");
    auto* div_render = div->add_subcommand("render", "Cylinder diagram as SVG");
    auto* render_group = div_render->add_option_group("input");
    render_group->add_option("--divisor", divisor_text, "Divisor to draw");
    render_group->add_option("--word", word_text, "Word to draw as glued panels, e.g. Q1*Q2*Q3");
    render_group->require_option(1);
    div_render->add_option("--out", out_path, "Write SVG here instead of stdout");
    div_render->add_option("--cycle", cycle_index, "Cycle to draw an empty word on");
    for (auto* sc : {div_compose, div_real, div_factor, div_render})
        sc->add_option("--cycles", cycles_text, "Cycle structure, e.g. Q1>Q2>Q3;P")->required();

    div_compose->callback([&] {
        action = [&] {
            auto cs = text::parse_cycles(cycles_text);
            Divisor acc;
            for (const auto& t : divisor_texts) acc = compose(cs, acc, text::parse_divisor(cs, t));
            if (common.json)
                out << nlohmann::json{{"divisor", json::encode(acc)}, {"text", text::format_divisor(cs, acc)}}.dump(2) << '\n';
            else
                out << text::format_divisor(cs, acc) << '\n';
        };
    });
    div_real->callback([&] {
        action = [&] {
            auto cs = text::parse_cycles(cycles_text);
            auto d = text::parse_divisor(cs, divisor_text);
            bool ok = is_realizable(cs, d);
            if (common.json)
                out << nlohmann::json{{"divisor", json::encode(d)}, {"realizable", ok}}.dump(2) << '\n';
            else
                out << (ok ? "true" : "false") << '\n';
        };
    });
    div_factor->callback([&] {
        action = [&] {
            auto cs = text::parse_cycles(cycles_text);
            auto d = text::parse_divisor(cs, divisor_text);
            auto bound = word_max_len ? *word_max_len : default_max_len(cs, d);
            auto res = enumerate_factorizations(cs, d, bound);
            if (common.json) {
                nlohmann::json words = nlohmann::json::array();
                for (const auto& w : res.words) words.push_back(w);
                out << nlohmann::json{{"divisor", json::encode(d)}, {"max_len", bound}, {"truncated", res.truncated}, {"reachable", res.reachable}, {"words", words}}
                           .dump(2)
                    << '\n';
            } else {
                for (const auto& w : res.words) out << (w.empty() ? "1" : text::format_word(w)) << '\n';
                if (!res.reachable) out << "# no word of maximal ideals composes to this divisor\n";
                if (res.truncated) out << "# truncated at length " << bound << '\n';
            }
        };
    });
    div_render->callback([&] {
        action = [&] {
            auto cs = text::parse_cycles(cycles_text);
            std::string svg;
            if (!word_text.empty()) {
                auto w = text::parse_word(word_text);
                for (const auto& p : w) cs.position(p);
                svg = render_svg_word(cs, w, cycle_index);
            } else {
                svg = render_svg(cs, text::parse_divisor(cs, divisor_text));
            }
            if (out_path.empty()) {
                out << svg;
                return;
            }
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw DomainError("cannot open " + out_path + " for writing");
            file << svg;
            if (common.json)
                out << nlohmann::json{{"written", out_path}, {"bytes", svg.size()}}.dump(2) << '\n';
            else
                out << "wrote " << out_path << '\n';
        };
    });

    // ---- tring ----
    auto* tr = app.add_subcommand("tring", "Ideals of the triangular order T(l) as exponent matrices");
    tr->require_subcommand(1);
    std::size_t size_l = 3;
    std::vector<std::string> matrix_texts;
    std::string matrix_text;
    oracle::OracleOptions oracle_opt;
    auto* tr_mul = tr->add_subcommand("mul", "Product of ideals (min-plus)");
    tr_mul->add_option("matrices", matrix_texts, "Matrices as JSON rows or names T, J, Q1..")->required();
    auto* tr_div = tr->add_subcommand("divisor", "Divisor from a maximal chain");
    tr_div->add_option("matrix", matrix_text, "Ideal")->required();
    auto* tr_tau = tr->add_subcommand("tau", "Double left dual");
    tr_tau->add_option("matrix", matrix_text, "Ideal")->required();
    auto* tr_oracle = tr->add_subcommand("oracle", "Cross-validate divisor calculus against T(l)");
    tr_oracle->add_option("--max-exp", oracle_opt.max_exp, "Largest exponent in the ideal corpus");
    tr_oracle->add_option("--samples", oracle_opt.chain_samples, "Ideals sampled for chain independence");
    tr_oracle->add_option("--chains", oracle_opt.chains_per_ideal, "Random chains per sampled ideal");
    for (auto* sc : {tr_mul, tr_div, tr_tau, tr_oracle})
        sc->add_option("--l", size_l, "Matrix size l >= 2")->check(CLI::Range(std::size_t{2}, std::size_t{16}));

    auto print_matrix = [&](const tring::ExponentMatrix& m, const char* key) {
        if (common.json)
            out << nlohmann::json{{key, json::encode(m)}, {"is_ideal", tring::is_ideal(m)}}.dump(2) << '\n';
        else
            out << text::format_matrix_bracket(m) << '\n';
    };
    tr_mul->callback([&] {
        action = [&] {
            auto acc = text::parse_matrix(matrix_texts.front(), size_l);
            for (std::size_t n = 1; n < matrix_texts.size(); ++n) acc = tring::mul(acc, text::parse_matrix(matrix_texts[n], size_l));
            print_matrix(acc, "product");
        };
    });
    tr_div->callback([&] {
        action = [&] {
            auto m = text::parse_matrix(matrix_text, size_l);
            auto d = tring::divisor_of(m);
            auto cs = tring::cycle_structure(size_l);
            if (common.json)
                out << nlohmann::json{{"ideal", json::encode(m)}, {"divisor", json::encode(d)}, {"text", text::format_divisor(cs, d)}}
                           .dump(2)
                    << '\n';
            else
                out << text::format_divisor(cs, d) << '\n';
        };
    });
    tr_tau->callback([&] {
        action = [&] {
            auto m = text::parse_matrix(matrix_text, size_l);
            if (!tring::is_ideal(m)) throw DomainError("matrix is not an ideal of T(l)");
            print_matrix(tring::tau_ideal(m), "tau");
        };
    });
    tr_oracle->callback([&] {
        action = [&] {
            oracle_opt.l = size_l;
            oracle_opt.seed = common.seed;
            if (common.cap) oracle_opt.caps.ideal_box = *common.cap;
            auto rep = oracle::run(oracle_opt);
            if (common.json) {
                out << json::encode(rep).dump(2) << '\n';
            } else {
                out << "corpus l=" << rep.l << " max_exp=" << rep.max_exp << " ideals=" << rep.corpus_size
                    << " seed=" << rep.seed << '\n';
                for (const auto& p : rep.properties) {
                    out << (p.passed ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " checks)";
                    if (!p.passed) out << ": " << p.counterexample;
                    out << '\n';
                }
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    try {
        action();
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << " (raise it with --cap)\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace nufact::cli
