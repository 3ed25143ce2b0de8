#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "group.hpp"
#include "lexarray.hpp"
#include "word.hpp"

namespace christoffel::cli {

using json = nlohmann::json;

// Exit codes: 0 success, 1 domain errors (NotCoprime, NotInvertible, ...),
// 2 usage errors (unknown flags, malformed values). Output is built in
// full before anything is written, so errors never leave partial results.

namespace detail {

inline json matrix_json(const ChristoffelMatrix& m) {
    return json{{"ring", m.ring().name()},
                {"n", m.size()},
                {"m", m.type()},
                {"a", m.letter_a().str()},
                {"b", m.letter_b().str()}};
}

inline json dense_json(const DenseMatrix& d) {
    json rows = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < d.size(); ++j) row.push_back(d.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"ring", d.ring().name()}, {"n", d.size()}, {"rows", std::move(rows)}};
}

inline std::string matrix_plain(const ChristoffelMatrix& m) {
    std::ostringstream os;
    os << "n: " << m.size() << "\n"
       << "m: " << m.type() << "\n"
       << "a: " << m.letter_a().str() << "\n"
       << "b: " << m.letter_b().str() << "\n";
    return os.str();
}

inline char parse_letter(const std::string& s) {
    if (s.size() != 1) throw CLI::ValidationError("letters must be single characters: " + s);
    return s[0];
}

inline ChristoffelWord parse_word(const std::string& s) {
    auto w = is_christoffel(s);
    if (!w) raise(errc::not_christoffel, s);
    return *w;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

struct Output {
    std::string format = "plain";
    std::string path;

    void add_flags(CLI::App* cmd, std::initializer_list<std::string> formats) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(std::vector<std::string>(formats)))
            ->capture_default_str();
        cmd->add_option("--out", path, "write output to a file instead of stdout");
    }
};

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Christoffel words, their lexicographic arrays, and the groups they generate",
                 "christoffel"};
    app.require_subcommand(1);

    std::string result;  // assembled by the selected subcommand

    // --- word n m [a b] ------------------------------------------------
    struct {
        std::size_t n = 0, m = 0;
        std::string a, b;
        detail::Output output;
    } word_args;
    auto* word_cmd = app.add_subcommand("word", "construct the Christoffel word c_m(a,b)");
    word_cmd->add_option("n", word_args.n, "length")->required();
    word_cmd->add_option("m", word_args.m, "type")->required();
    word_cmd->add_option("a", word_args.a, "first letter (default 1)");
    word_cmd->add_option("b", word_args.b, "second letter (default 0)");
    word_args.output.add_flags(word_cmd, {"plain", "json"});
    word_cmd->callback([&] {
        char a = word_args.a.empty() ? '1' : detail::parse_letter(word_args.a);
        char b = word_args.b.empty() ? '0' : detail::parse_letter(word_args.b);
        ChristoffelWord w(word_args.n, word_args.m, a, b);
        if (word_args.output.format == "json")
            result = json{{"n", w.length()},
                          {"m", w.type()},
                          {"a", std::string(1, a)},
                          {"b", std::string(1, b)},
                          {"word", w.letters()}}
                         .dump() +
                     "\n";
        else
            result = w.letters() + "\n";
    });

    // --- array n m [a b] ------------------------------------------------
    struct {
        std::size_t n = 0, m = 0;
        std::string a, b, ring;
        detail::Output output;
    } array_args;
    auto* array_cmd = app.add_subcommand("array", "the full lexicographic array of c_m(a,b)");
    array_cmd->add_option("n", array_args.n, "length")->required();
    array_cmd->add_option("m", array_args.m, "type")->required();
    array_cmd->add_option("a", array_args.a, "first letter (default 1)");
    array_cmd->add_option("b", array_args.b, "second letter (default 0)");
    array_cmd->add_option("--ring", array_args.ring,
                          "treat the letters as ring values and print the dense matrix");
    array_args.output.add_flags(array_cmd, {"plain", "json"});
    array_cmd->callback([&] {
        if (!array_args.ring.empty()) {
            Ring ring = Ring::parse(array_args.ring);
            RingValue a = ring.parse_value(array_args.a.empty() ? "1" : array_args.a);
            RingValue b = ring.parse_value(array_args.b.empty() ? "0" : array_args.b);
            DenseMatrix d = ChristoffelMatrix(ring, array_args.n, array_args.m, a, b).to_dense();
            if (array_args.output.format == "json") {
                result = detail::dense_json(d).dump() + "\n";
            } else {
                std::ostringstream os;
                for (std::size_t i = 0; i < d.size(); ++i) {
                    for (std::size_t j = 0; j < d.size(); ++j)
                        os << (j ? " " : "") << d.at(i, j).str();
                    os << "\n";
                }
                result = os.str();
            }
            return;
        }
        char a = array_args.a.empty() ? '1' : detail::parse_letter(array_args.a);
        char b = array_args.b.empty() ? '0' : detail::parse_letter(array_args.b);
        ChristoffelWord w(array_args.n, array_args.m, a, b);
        auto rows = sorted_rotations(w.letters());
        if (array_args.output.format == "json") {
            result = json{{"n", w.length()}, {"m", w.type()}, {"rows", rows}}.dump() + "\n";
        } else {
            std::ostringstream os;
            for (const auto& r : rows) os << r << "\n";
            result = os.str();
        }
    });

    // --- check w ---------------------------------------------------------
    struct {
        std::string w;
        detail::Output output;
    } check_args;
    auto* check_cmd = app.add_subcommand("check", "recognition report for a word");
    check_cmd->add_option("w", check_args.w, "word")->required();
    check_args.output.add_flags(check_cmd, {"plain", "json"});
    check_cmd->callback([&] {
        auto rec = is_christoffel(check_args.w);
        auto shift = constant_shift(check_args.w);
        bool lyndon = is_lyndon(check_args.w);
        bool balanced = is_cyclically_balanced(check_args.w);
        if (check_args.output.format == "json") {
            json j{{"word", check_args.w},
                   {"christoffel", rec.has_value()},
                   {"lyndon", lyndon},
                   {"balanced", balanced}};
            j["type"] = rec ? json(rec->type()) : json(nullptr);
            j["first"] = rec ? json(std::string(1, rec->first_letter())) : json(nullptr);
            j["other"] = rec ? json(std::string(1, rec->other_letter())) : json(nullptr);
            j["shift"] = shift ? json(*shift) : json(nullptr);
            result = j.dump() + "\n";
        } else {
            std::ostringstream os;
            os << "word: " << check_args.w << "\n"
               << "christoffel: " << (rec ? "true" : "false") << "\n";
            if (rec)
                os << "type: " << rec->type() << "\n"
                   << "first: " << rec->first_letter() << "\n"
                   << "other: " << rec->other_letter() << "\n";
            if (shift) os << "shift: " << *shift << "\n";
            os << "lyndon: " << (lyndon ? "true" : "false") << "\n"
               << "balanced: " << (balanced ? "true" : "false") << "\n";
            result = os.str();
        }
    });

    // --- mul w1 w2 --------------------------------------------------------
    struct {
        std::string w1, w2;
        detail::Output output;
    } mul_args;
    auto* mul_cmd = app.add_subcommand("mul", "product of two {0,1} Christoffel words");
    mul_cmd->add_option("w1", mul_args.w1, "first word")->required();
    mul_cmd->add_option("w2", mul_args.w2, "second word")->required();
    mul_args.output.add_flags(mul_cmd, {"plain", "json"});
    mul_cmd->callback([&] {
        ChristoffelWord prod =
            word_mul(detail::parse_word(mul_args.w1), detail::parse_word(mul_args.w2));
        if (mul_args.output.format == "json")
            result = json{{"w1", mul_args.w1}, {"w2", mul_args.w2}, {"product", prod.letters()}}
                         .dump() +
                     "\n";
        else
            result = prod.letters() + "\n";
    });

    // --- mul-matrix n m1 a1 b1 m2 a2 b2 ------------------------------------
    struct {
        std::size_t n = 0, m1 = 0, m2 = 0;
        std::string a1, b1, a2, b2, ring = "fp:2";
        detail::Output output;
    } mm_args;
    auto* mm_cmd = app.add_subcommand("mul-matrix", "closed-form product of two Christoffel matrices");
    mm_cmd->add_option("n", mm_args.n, "size")->required();
    mm_cmd->add_option("m1", mm_args.m1)->required();
    mm_cmd->add_option("a1", mm_args.a1)->required();
    mm_cmd->add_option("b1", mm_args.b1)->required();
    mm_cmd->add_option("m2", mm_args.m2)->required();
    mm_cmd->add_option("a2", mm_args.a2)->required();
    mm_cmd->add_option("b2", mm_args.b2)->required();
    mm_cmd->add_option("--ring", mm_args.ring, "ring: int | rat | mod:N | fp:p")
        ->capture_default_str();
    mm_args.output.add_flags(mm_cmd, {"plain", "json"});
    mm_cmd->callback([&] {
        Ring ring = Ring::parse(mm_args.ring);
        ChristoffelMatrix a(ring, mm_args.n, mm_args.m1, ring.parse_value(mm_args.a1),
                            ring.parse_value(mm_args.b1));
        ChristoffelMatrix b(ring, mm_args.n, mm_args.m2, ring.parse_value(mm_args.a2),
                            ring.parse_value(mm_args.b2));
        ChristoffelMatrix prod = mul_closed(a, b);
        result = mm_args.output.format == "json" ? detail::matrix_json(prod).dump() + "\n"
                                                 : detail::matrix_plain(prod);
    });

    // --- inv n m a b --------------------------------------------------------
    struct {
        std::size_t n = 0, m = 0;
        std::string a, b, ring = "fp:2";
        detail::Output output;
    } inv_args;
    auto* inv_cmd = app.add_subcommand("inv", "closed-form inverse of a Christoffel matrix");
    inv_cmd->add_option("n", inv_args.n, "size")->required();
    inv_cmd->add_option("m", inv_args.m)->required();
    inv_cmd->add_option("a", inv_args.a)->required();
    inv_cmd->add_option("b", inv_args.b)->required();
    inv_cmd->add_option("--ring", inv_args.ring, "ring: int | rat | mod:N | fp:p")
        ->capture_default_str();
    inv_args.output.add_flags(inv_cmd, {"plain", "json"});
    inv_cmd->callback([&] {
        Ring ring = Ring::parse(inv_args.ring);
        ChristoffelMatrix a(ring, inv_args.n, inv_args.m, ring.parse_value(inv_args.a),
                            ring.parse_value(inv_args.b));
        ChristoffelMatrix ainv = inverse(a);
        bool verified =
            dense_mul(a.to_dense(), ainv.to_dense()) == DenseMatrix::identity(ring, a.size());
        if (inv_args.output.format == "json") {
            json j = detail::matrix_json(ainv);
            j["verified"] = verified;
            result = j.dump() + "\n";
        } else {
            result = detail::matrix_plain(ainv) +
                     std::string("verified: ") + (verified ? "true" : "false") + "\n";
        }
    });

    // --- det n m a b ----------------------------------------------------------
    struct {
        std::size_t n = 0, m = 0;
        std::string a, b, ring = "fp:2";
        detail::Output output;
    } det_args;
    auto* det_cmd = app.add_subcommand("det", "closed-form and exact determinants");
    det_cmd->add_option("n", det_args.n, "size")->required();
    det_cmd->add_option("m", det_args.m)->required();
    det_cmd->add_option("a", det_args.a)->required();
    det_cmd->add_option("b", det_args.b)->required();
    det_cmd->add_option("--ring", det_args.ring, "ring: int | rat | mod:N | fp:p")
        ->capture_default_str();
    det_args.output.add_flags(det_cmd, {"plain", "json"});
    det_cmd->callback([&] {
        Ring ring = Ring::parse(det_args.ring);
        ChristoffelMatrix a(ring, det_args.n, det_args.m, ring.parse_value(det_args.a),
                            ring.parse_value(det_args.b));
        std::string closed = det_closed(a).str();
        std::string exact = det_exact(a.to_dense()).str();
        if (det_args.output.format == "json")
            result = json{{"closed", closed}, {"exact", exact}}.dump() + "\n";
        else
            result = "closed: " + closed + "\nexact: " + exact + "\n";
    });

    // --- dual w ------------------------------------------------------------
    struct {
        std::string w;
        detail::Output output;
    } dual_args;
    auto* dual_cmd = app.add_subcommand("dual", "dual of a {0,1} Christoffel word");
    dual_cmd->add_option("w", dual_args.w, "word")->required();
    dual_args.output.add_flags(dual_cmd, {"plain", "json"});
    dual_cmd->callback([&] {
        ChristoffelWord d = dual(detail::parse_word(dual_args.w));
        if (dual_args.output.format == "json")
            result = json{{"word", dual_args.w}, {"dual", d.letters()}, {"type", d.type()}}
                         .dump() +
                     "\n";
        else
            result = d.letters() + "\n";
    });

    // --- group n [--p q] ------------------------------------------------------
    struct {
        std::size_t n = 0;
        std::uint64_t p = 2;
        detail::Output output;
    } group_args;
    auto* group_cmd = app.add_subcommand("group", "the group GC_n(F_p) of invertible matrices");
    group_cmd->add_option("n", group_args.n, "size")->required();
    group_cmd->add_option("--p", group_args.p, "field characteristic (prime, default 2)")
        ->capture_default_str();
    group_args.output.add_flags(group_cmd, {"plain", "json"});
    group_cmd->callback([&] {
        std::size_t n = group_args.n;
        GroupStructure structure;
        json elements = json::array();
        std::vector<std::string> element_names;
        if (group_args.p == 2) {
            auto els = enumerate_gc_f2(n);
            structure = group_structure(els);
            for (const auto& e : els) {
                element_names.push_back(e.name());
                elements.push_back(e.name());
            }
        } else {
            auto els = enumerate_gc(n, Int(group_args.p));
            structure = group_structure(els);
            for (const auto& e : els) {
                std::string s = "C_" + std::to_string(e.type()) + "(" + e.letter_a().str() + "," +
                                e.letter_b().str() + ")";
                element_names.push_back(s);
                elements.push_back(json{{"m", e.type()},
                                        {"a", e.letter_a().str()},
                                        {"b", e.letter_b().str()}});
            }
        }
        if (group_args.output.format == "json") {
            result = json{{"n", n},
                          {"p", group_args.p},
                          {"order", structure.order},
                          {"elements", elements},
                          {"invariant_factors", structure.invariant_factors}}
                         .dump() +
                     "\n";
        } else {
            std::ostringstream os;
            os << "n: " << n << "\np: " << group_args.p << "\norder: " << structure.order
               << "\nelements:";
            for (const auto& s : element_names) os << " " << s;
            os << "\ninvariant_factors:";
            for (auto f : structure.invariant_factors) os << " " << f;
            os << "\n";
            result = os.str();
        }
    });

    // --- table n ---------------------------------------------------------------
    struct {
        std::size_t n = 0;
        detail::Output output;
    } table_args;
    auto* table_cmd = app.add_subcommand("table", "Cayley table of GC_n(F_2)");
    table_cmd->add_option("n", table_args.n, "size")->required();
    table_args.output.add_flags(table_cmd, {"plain", "json", "csv"});
    table_cmd->callback([&] {
        auto els = enumerate_gc_f2(table_args.n);
        auto cell = [&](std::size_t i, std::size_t j) { return f2_mul(els[i], els[j]).name(); };
        if (table_args.output.format == "json") {
            json names = json::array(), rows = json::array();
            for (const auto& e : els) names.push_back(e.name());
            for (std::size_t i = 0; i < els.size(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < els.size(); ++j) row.push_back(cell(i, j));
                rows.push_back(std::move(row));
            }
            result = json{{"n", table_args.n}, {"elements", names}, {"table", rows}}.dump() + "\n";
        } else {
            const char* sep = table_args.output.format == "csv" ? "," : " ";
            std::ostringstream os;
            for (const auto& e : els) os << sep << e.name();
            os << "\n";
            for (std::size_t i = 0; i < els.size(); ++i) {
                os << els[i].name();
                for (std::size_t j = 0; j < els.size(); ++j) os << sep << cell(i, j);
                os << "\n";
            }
            result = os.str();
        }
    });

    // --- verify-neven -------------------------------------------------------------
    struct {
        std::size_t nmax = 128;
        detail::Output output;
    } verify_args;
    bool verify_failed = false;
    auto* verify_cmd =
        app.add_subcommand("verify-neven", "compare computed and predicted GC_n(F_2) structure");
    verify_cmd->add_option("--nmax", verify_args.nmax, "largest size to check")
        ->capture_default_str();
    verify_args.output.add_flags(verify_cmd, {"plain", "json", "csv"});
    verify_cmd->callback([&] {
        json rows = json::array();
        std::ostringstream os;
        if (verify_args.output.format == "csv") os << "n,order,invariant_factors,ok\n";
        std::size_t passed = 0;
        for (std::size_t n = 2; n <= verify_args.nmax; ++n) {
            GroupStructure got = group_structure(enumerate_gc_f2(n));
            GroupStructure want = predicted_structure(n);
            bool ok = got == want;
            verify_failed = verify_failed || !ok;
            passed += ok;
            if (verify_args.output.format == "json") {
                rows.push_back(json{{"n", n},
                                    {"order", got.order},
                                    {"invariant_factors", got.invariant_factors},
                                    {"predicted", want.invariant_factors},
                                    {"ok", ok}});
            } else if (verify_args.output.format == "csv") {
                std::string fs;
                for (auto f : got.invariant_factors) fs += (fs.empty() ? "" : "|") + std::to_string(f);
                os << n << "," << got.order << "," << fs << "," << (ok ? "true" : "false") << "\n";
            } else {
                os << "n=" << n << " order=" << got.order << " factors=" << got.str()
                   << (ok ? " ok" : " MISMATCH predicted=" + want.str()) << "\n";
            }
        }
        if (verify_args.output.format == "json") {
            result = json{{"nmax", verify_args.nmax},
                          {"passed", passed},
                          {"total", verify_args.nmax - 1},
                          {"rows", rows}}
                         .dump() +
                     "\n";
        } else {
            if (verify_args.output.format == "plain")
                os << passed << "/" << verify_args.nmax - 1 << " sizes verified\n";
            result = os.str();
        }
    });

    // --- represent d1,d2,... ----------------------------------------------------------
    struct {
        std::string factors;
        std::size_t nmax = 100;
        detail::Output output;
    } rep_args;
    auto* rep_cmd = app.add_subcommand(
        "represent", "find Christoffel matrices over F_2 representing an abelian group");
    rep_cmd->add_option("factors", rep_args.factors, "invariant factors, e.g. 2,4")->required();
    rep_cmd->add_option("--nmax", rep_args.nmax, "largest size to scan")->capture_default_str();
    rep_args.output.add_flags(rep_cmd, {"plain", "json"});
    rep_cmd->callback([&] {
        std::vector<std::uint64_t> factors;
        for (const std::string& part : detail::split(rep_args.factors, ','))
            factors.push_back(std::stoull(part));
        GroupStructure target = GroupStructure::from_factors(std::move(factors));
        auto rep = find_representation(target, rep_args.nmax);
        if (!rep)
            raise(errc::not_applicable,
                  "no size up to " + std::to_string(rep_args.nmax) + " admits " + target.str());
        auto span = rep->generators.empty()
                        ? std::vector<GroupElementF2>{GroupElementF2::identity(rep->n)}
                        : subgroup_generated(rep->generators);
        GroupStructure got = group_structure(span);
        bool verified = got == target;
        if (rep_args.output.format == "json") {
            json gens = json::array();
            for (const auto& g : rep->generators)
                gens.push_back(json{{"tag", g.tag == Tag::a ? "a" : "b"}, {"m", g.m}});
            result = json{{"n", rep->n},
                          {"p", 2},
                          {"order", got.order},
                          {"invariant_factors", got.invariant_factors},
                          {"generators", gens},
                          {"verified", verified}}
                         .dump() +
                     "\n";
        } else {
            std::ostringstream os;
            os << "n: " << rep->n << "\ngenerators:";
            for (const auto& g : rep->generators) os << " " << g.name();
            os << "\norder: " << got.order << "\ninvariant_factors:";
            for (auto f : got.invariant_factors) os << " " << f;
            os << "\nverified: " << (verified ? "true" : "false") << "\n";
            result = os.str();
        }
    });

    // ---------------------------------------------------------------------------
    std::string out_path;
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
        for (const auto* cmd : app.get_subcommands()) {
            auto* opt = cmd->get_option_no_throw("--out");
            if (opt && opt->count() > 0) out_path = opt->as<std::string>();
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << "\n";
            return 1;
        }
        file << result;
    } else {
        out << result;
    }
    return verify_failed ? 1 : 0;
}

}  // namespace christoffel::cli
