// Command line interface: parses a weighted ring and an ideal, runs one of
// the library computations and prints a deterministic JSON report. Exit
// codes: 0 success, 1 negative verdict, 2 inconclusive, 3 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wpoly/wpoly.hpp"

using json = nlohmann::ordered_json;
using namespace wpoly;

namespace {

struct Options {
    std::string ring_spec;
    std::string ideal_spec;
    std::string ideal_file;
    std::string order_name = "wdegrevlex";
    std::string var_order;
    std::uint64_t seed = 1;
    int trials = 0;  // unset: 2 for genericity agreement, 32 for tfixed
    long long from = 0;
    long long to = 20;
    long long limit = 60;
    long long max_degree = -1;
    bool quotient = false;
    bool all_orders = false;
    bool simple = false;
    bool text = false;
    std::string of = "ideal";
    std::string map_spec;
    long long divisor_degree = -1;
    long long monomial_degree = -1;
};

bool text_mode = false;

void print_flat(const json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            print_flat(value, prefix.empty() ? key : prefix + "." + key);
    } else if (j.is_array()) {
        std::cout << prefix << ":";
        for (const auto& value : j) {
            if (value.is_structured())
                std::cout << " " << value.dump();
            else if (value.is_string())
                std::cout << " " << value.get<std::string>();
            else
                std::cout << " " << value.dump();
        }
        std::cout << "\n";
    } else if (j.is_string()) {
        std::cout << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        std::cout << prefix << ": " << j.dump() << "\n";
    }
}

std::vector<int> parse_var_order(const RingDescriptor& ring, const std::string& spec) {
    if (spec.empty()) return {};
    std::vector<int> priority;
    std::string name;
    std::istringstream in(spec);
    while (std::getline(in, name, ',')) {
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        int v = ring.index_of(name);
        if (v < 0) throw ParseError("unknown variable '" + name + "' in --var-order", 0);
        priority.push_back(v);
    }
    if (static_cast<int>(priority.size()) != ring.variable_count())
        throw ParseError("--var-order must list every variable", 0);
    return priority;
}

TermOrder make_order(const RingDescriptor& ring, const Options& opt) {
    std::vector<int> priority = parse_var_order(ring, opt.var_order);
    if (opt.order_name == "wdeglex") return TermOrder::wdeglex(ring, priority);
    if (opt.order_name == "wdegrevlex") return TermOrder::wdegrevlex(ring, priority);
    if (opt.order_name == "lex") return TermOrder::lex(ring, priority);
    throw ParseError("unknown order '" + opt.order_name + "'", 0);
}

TermOrder make_lex_order(const RingDescriptor& ring, const Options& opt) {
    return TermOrder::lex(ring, parse_var_order(ring, opt.var_order));
}

std::string load_ideal_spec(const Options& opt) {
    if (!opt.ideal_file.empty()) {
        std::ifstream in(opt.ideal_file);
        if (!in) throw ParseError("cannot open ideal file '" + opt.ideal_file + "'", 0);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return opt.ideal_spec;
}

Ideal require_ideal(const RingDescriptor& ring, const Options& opt) {
    return parse_ideal(ring, load_ideal_spec(opt));
}

MonomialIdeal require_monomial_ideal(const RingDescriptor& ring, const Options& opt) {
    Ideal I = require_ideal(ring, opt);
    std::vector<Monomial> gens;
    for (const auto& g : I.generators) {
        if (!g.is_monomial() )
            throw ParseError("this command needs monomial generators", 0);
        gens.push_back(g.terms().begin()->first);
    }
    return MonomialIdeal(ring, gens);
}

json ring_json(const RingDescriptor& ring) {
    json groups = json::array();
    for (int g = 0; g < ring.group_count(); ++g)
        groups.push_back({{"weight", ring.group(g).weight}, {"count", ring.group(g).count}});
    json names = json::array();
    for (const auto& n : ring.names()) names.push_back(n);
    return {{"groups", groups},
            {"names", names},
            {"lcm", ring.lcm_weight()},
            {"condition_multipli", ring.satisfies_condition_multipli()}};
}

json monomials_json(const RingDescriptor& ring, std::vector<Monomial> gens,
                    const TermOrder& order) {
    std::sort(gens.begin(), gens.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    json out = json::array();
    for (const auto& m : gens) out.push_back(format_monomial(ring, m));
    return out;
}

json outcome_json(const RingDescriptor& ring, const LexifyOutcome& out, const TermOrder& order) {
    json j;
    switch (out.status) {
        case LexifyOutcome::Status::Lexifiable:
            j["status"] = "lexifiable";
            j["lex_ideal"] = monomials_json(ring, out.lex_ideal.minimal_generators(), order);
            break;
        case LexifyOutcome::Status::NotLexifiable:
            j["status"] = "not_lexifiable";
            j["witness_degree"] = out.witness_degree;
            j["h_ideal"] = out.h_ideal;
            j["h_candidate"] = out.h_candidate;
            break;
        case LexifyOutcome::Status::Inconclusive:
            j["status"] = "inconclusive";
            j["degree_bound"] = out.degree_bound;
            break;
    }
    return j;
}

int status_exit(const LexifyOutcome& out) {
    switch (out.status) {
        case LexifyOutcome::Status::Lexifiable: return 0;
        case LexifyOutcome::Status::NotLexifiable: return 1;
        default: return 2;
    }
}

void emit(const json& j) {
    if (text_mode)
        print_flat(j, "");
    else
        std::cout << j.dump(2) << "\n";
}

int run_command(const std::string& command, const Options& opt) {
    RingDescriptor ring = parse_ring(opt.ring_spec);
    json report;
    report["command"] = command;
    report["ring"] = ring_json(ring);
    report["seed"] = opt.seed;

    if (command == "hilbert") {
        Ideal I = require_ideal(ring, opt);
        TermOrder order = make_order(ring, opt);
        if (opt.from < 0 || opt.to < opt.from) throw ParseError("bad degree range", 0);
        MonomialIdeal in = I.is_zero() ? MonomialIdeal(ring, {}) : initial_ideal(I, order);
        auto values = hilbert_function_range(in, opt.to, opt.quotient);
        report["convention"] = opt.quotient ? "H_{R/I}" : "H_I";
        json table = json::array();
        for (long long d = opt.from; d <= opt.to; ++d)
            table.push_back({d, to_string(values[d])});
        report["values"] = table;
        emit(report);
        return 0;
    }
    if (command == "series") {
        MonomialIdeal I = require_monomial_ideal(ring, opt);
        HilbertSeries hs = hilbert_series(I);
        report["convention"] = "H_{R/I}";
        json num = json::array();
        for (std::size_t i = 0; i < hs.numerator.size(); ++i)
            if (hs.numerator[i] != 0) num.push_back({i, to_string(hs.numerator[i])});
        report["numerator"] = num;
        json den = json::array();
        for (int g = 0; g < ring.group_count(); ++g)
            den.push_back({ring.group(g).weight, ring.group(g).count});
        report["denominator"] = den;
        emit(report);
        return 0;
    }
    if (command == "quasipoly") {
        MonomialIdeal I = require_monomial_ideal(ring, opt);
        QuasiPolynomial qp = quasi_polynomial(hilbert_series(I));
        report["convention"] = "H_{R/I}";
        report["modulus"] = qp.modulus;
        report["pole_order"] = qp.pole_order;
        report["threshold"] = qp.threshold;
        json polys = json::array();
        for (long long j = 0; j < qp.modulus; ++j) {
            json coeffs = json::array();
            for (const auto& c : qp.polys[j]) coeffs.push_back(to_string(c));
            polys.push_back({{"residue", j}, {"coefficients", coeffs}});
        }
        report["polynomials"] = polys;
        emit(report);
        return 0;
    }
    if (command == "groebner" || command == "initial" || command == "gin") {
        Ideal I = require_ideal(ring, opt);
        TermOrder order = make_order(ring, opt);
        report["order"] = opt.order_name;
        if (command == "groebner") {
            GroebnerBasis gb = buchberger(I, order);
            json elems = json::array();
            for (const auto& g : gb.elements) elems.push_back(format_polynomial(ring, g, order));
            report["elements"] = elems;
        } else {
            MonomialIdeal result = command == "initial"
                                       ? initial_ideal(I, order)
                                       : gin(I, order, opt.seed, std::max(opt.trials, 2));
            if (command == "gin") report["trials"] = std::max(opt.trials, 2);
            report["generators"] = monomials_json(ring, result.minimal_generators(), order);
        }
        emit(report);
        return 0;
    }
    if (command == "stable") {
        MonomialIdeal I = require_monomial_ideal(ring, opt);
        StabilityResult res = is_strongly_stable(I);
        report["strongly_stable"] = res.stable;
        if (res.violation) {
            const auto& w = *res.violation;
            json v;
            v["generator"] = format_monomial(ring, w.generator);
            v["variable"] = ring.name(w.var);
            if (w.cross_group)
                v["replacement"] = format_monomial(ring, w.replacement);
            else
                v["raised_to"] = ring.name(w.within_target);
            v["missing"] = format_monomial(ring, w.missing);
            report["violation"] = v;
        }
        emit(report);
        return res.stable ? 0 : 1;
    }
    if (command == "tfixed") {
        Ideal I = require_ideal(ring, opt);
        TermOrder order = make_order(ring, opt);
        int trials = opt.trials > 0 ? opt.trials : 32;
        bool fixed = is_T_fixed(I, trials, opt.seed, order);
        report["trials"] = trials;
        report["t_fixed"] = fixed;
        emit(report);
        return fixed ? 0 : 1;
    }
    if (command == "depth") {
        Ideal I = require_ideal(ring, opt);
        report["depth"] = depth(I);
        report["module"] = "R/I";
        emit(report);
        return 0;
    }
    if (command == "reg") {
        Ideal I = require_ideal(ring, opt);
        bool quotient = opt.of == "quotient";
        report["module"] = quotient ? "R/I" : "I";
        report["regularity"] = regularity(I, quotient);
        emit(report);
        return 0;
    }
    if (command == "betti") {
        Ideal I = require_ideal(ring, opt);
        bool quotient = opt.of == "quotient";
        BettiTable table = betti(I, quotient);
        report["module"] = quotient ? "R/I" : "I";
        json entries = json::array();
        for (const auto& [key, count] : table.entries)
            entries.push_back({key.first, key.second, count});
        report["betti"] = entries;
        json b = json::array();
        for (int i = 0; i <= table.max_index(); ++i) b.push_back({i, table.b(i)});
        report["b"] = b;
        emit(report);
        return 0;
    }
    if (command == "islex") {
        MonomialIdeal I = require_monomial_ideal(ring, opt);
        TermOrder lex = make_lex_order(ring, opt);
        LexCheckResult res = is_lexicographic_ideal(I, lex);
        report["lexicographic"] = res.lexicographic;
        report["checked_through"] = res.checked_through;
        if (!res.lexicographic) report["first_failure"] = res.first_failure;
        emit(report);
        return res.lexicographic ? 0 : 1;
    }
    if (command == "lexify") {
        MonomialIdeal I = require_monomial_ideal(ring, opt);
        if (opt.all_orders) {
            auto outcomes = lexify_all_group_orders(I, opt.max_degree);
            json orders = json::array();
            int best = 1;
            bool any_inconclusive = false;
            for (const auto& [perm, out] : outcomes) {
                TermOrder lex =
                    TermOrder::lex(ring, TermOrder::priority_from_group_order(ring, perm));
                json entry;
                json names = json::array();
                for (int v : lex.priority()) names.push_back(ring.name(v));
                entry["priority"] = names;
                entry.update(outcome_json(ring, out, lex));
                orders.push_back(entry);
                if (out.status == LexifyOutcome::Status::Lexifiable) best = 0;
                if (out.status == LexifyOutcome::Status::Inconclusive) any_inconclusive = true;
            }
            report["orders"] = orders;
            emit(report);
            return best == 0 ? 0 : (any_inconclusive ? 2 : 1);
        }
        TermOrder lex = make_lex_order(ring, opt);
        LexifyOutcome out = lexify(I, lex, opt.max_degree);
        report.update(outcome_json(ring, out, lex));
        emit(report);
        return status_exit(out);
    }
    if (command == "polarize") {
        MonomialIdeal I = require_monomial_ideal(ring, opt);
        TermOrder lex = make_lex_order(ring, opt);
        if (opt.simple) {
            Polarization p = polarize(I);
            report["extended_ring"] = ring_json(p.extended_ring);
            report["generators"] =
                monomials_json(p.extended_ring, p.ideal.minimal_generators(),
                               TermOrder::lex(p.extended_ring));
            json back = json::array();
            for (std::size_t v = 0; v < p.back_map.size(); ++v)
                back.push_back({p.extended_ring.name(static_cast<int>(v)),
                                ring.name(p.back_map[v])});
            report["back_map"] = back;
            emit(report);
            return 0;
        }
        MonomialIdeal ipol = completely_polarize(I, lex, opt.seed, std::max(opt.trials, 2));
        report["trials"] = std::max(opt.trials, 2);
        report["generators"] = monomials_json(ring, ipol.minimal_generators(), lex);
        emit(report);
        return 0;
    }
    if (command == "gapbound") {
        report["gap_bound"] = gap_bound(ring);
        if (opt.divisor_degree >= 0 && opt.monomial_degree >= 0) {
            TermOrder lex = make_lex_order(ring, opt);
            report["witnesses"] = monomials_json(
                ring, gap_witnesses(ring, opt.divisor_degree, opt.monomial_degree), lex);
        }
        emit(report);
        return 0;
    }
    if (command == "frobenius") {
        report["frobenius"] = frobenius_number(ring);
        emit(report);
        return 0;
    }
    if (command == "stabilization") {
        MonomialIdeal I = require_monomial_ideal(ring, opt);
        auto result = stabilization_degree(I, opt.limit);
        report["limit"] = opt.limit;
        if (result) {
            report["stabilization_degree"] = *result;
        } else {
            report["stabilization_degree"] = nullptr;
        }
        emit(report);
        return result ? 0 : 1;
    }
    if (command == "decompose-aut") {
        GradedAutomorphism phi = GradedAutomorphism::identity(ring);
        if (!opt.map_spec.empty()) {
            std::vector<Polynomial> images(ring.variable_count());
            std::vector<bool> seen(ring.variable_count(), false);
            std::string normalized = opt.map_spec;
            std::replace(normalized.begin(), normalized.end(), ';', ',');
            std::string part;
            std::istringstream in(normalized);
            while (std::getline(in, part, ',')) {
                auto arrow = part.find("->");
                if (arrow == std::string::npos)
                    throw ParseError("--map entries look like 'x -> 2*x'", 0);
                std::string lhs = part.substr(0, arrow);
                lhs.erase(0, lhs.find_first_not_of(" \t"));
                lhs.erase(lhs.find_last_not_of(" \t") + 1);
                int v = ring.index_of(lhs);
                if (v < 0) throw ParseError("unknown variable '" + lhs + "' in --map", 0);
                images[v] = parse_polynomial(ring, part.substr(arrow + 2));
                seen[v] = true;
            }
            for (int v = 0; v < ring.variable_count(); ++v)
                if (!seen[v])
                    images[v] = Polynomial(Monomial::unit(ring.variable_count()).times(v, 1));
            phi = GradedAutomorphism::from_images(ring, images);
        } else {
            phi = random_automorphism(ring, AutomorphismMode::UpperTriangular, opt.seed);
        }
        auto seq = decompose_automorphism(phi);
        json factors = json::array();
        for (const auto& e : seq) {
            json f;
            switch (e.kind) {
                case ElementaryAutomorphism::Kind::Diagonal:
                    f["kind"] = "diagonal";
                    f["variable"] = ring.name(e.var);
                    f["scale"] = to_string(e.coeff);
                    break;
                case ElementaryAutomorphism::Kind::Triangular:
                    f["kind"] = "triangular";
                    f["variable"] = ring.name(e.var);
                    f["source"] = ring.name(e.source);
                    f["coefficient"] = to_string(e.coeff);
                    break;
                case ElementaryAutomorphism::Kind::Nonlinear:
                    f["kind"] = "nonlinear";
                    f["variable"] = ring.name(e.var);
                    f["term"] = format_monomial(ring, e.term);
                    f["coefficient"] = to_string(e.coeff);
                    break;
            }
            factors.push_back(f);
        }
        report["factors"] = factors;
        report["recomposes"] = (compose_sequence(ring, seq) == phi);
        emit(report);
        return 0;
    }
    throw ParseError("unknown command '" + command + "'", 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations over weighted graded polynomial rings"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> commands{"hilbert", "series",  "quasipoly",     "gin",
                                      "initial", "groebner", "stable",       "tfixed",
                                      "depth",   "reg",      "betti",        "islex",
                                      "lexify",  "polarize", "gapbound",     "frobenius",
                                      "decompose-aut", "stabilization"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--ring", opt.ring_spec, "ring spec, e.g. x:2,y:4,z:5")->required();
        sub->add_option("--ideal", opt.ideal_spec, "ideal spec, e.g. 'x*y; y*z; x^5'");
        sub->add_option("--ideal-file", opt.ideal_file, "read the ideal spec from a file");
        sub->add_option("--order", opt.order_name, "wdeglex | wdegrevlex | lex");
        sub->add_option("--var-order", opt.var_order, "variable priority, names high to low");
        sub->add_option("--seed", opt.seed, "seed for all randomized steps");
        sub->add_option("--trials", opt.trials, "genericity trials (default 2; tfixed samples, default 32)");
        sub->add_option("--from", opt.from, "first degree (hilbert)");
        sub->add_option("--to", opt.to, "last degree (hilbert)");
        sub->add_option("--limit", opt.limit, "degree limit (stabilization)");
        sub->add_option("--max-degree", opt.max_degree, "search bound (lexify)");
        sub->add_flag("--quotient", opt.quotient, "report H_{R/I} instead of H_I");
        sub->add_flag("--all-orders", opt.all_orders, "lexify under every group order");
        sub->add_flag("--simple", opt.simple, "single polarization step");
        sub->add_option("--of", opt.of, "module for reg/betti: ideal | quotient");
        sub->add_option("--map", opt.map_spec, "automorphism images (decompose-aut)");
        sub->add_option("--divisor-degree", opt.divisor_degree, "gap witness divisor degree");
        sub->add_option("--monomial-degree", opt.monomial_degree, "gap witness monomial degree");
        sub->add_flag("--text", opt.text, "flat human-readable lines instead of JSON");
    }

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands().front()->get_name();
    text_mode = opt.text;
    try {
        return run_command(command, opt);
    } catch (const GenericityError& e) {
        json err{{"error", e.what()}, {"kind", "genericity"}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const ParseError& e) {
        json err{{"error", e.what()}, {"kind", "input"}};
        std::cout << err.dump(2) << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        json err{{"error", e.what()}, {"kind", "input"}};
        std::cout << err.dump(2) << "\n";
        return 3;
    }
}
