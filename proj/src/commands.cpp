/*
   Copyright 2026 The signrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "signrep/commands.hpp"

#include "signrep/error.hpp"
#include "signrep/module.hpp"
#include "signrep/specialize.hpp"

#include <sstream>

namespace signrep::cli {

namespace {

using io::Json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::PropagationViolation:
        case ErrorKind::AmbiguousMatching: return 1;
        default: return 2;
    }
}

Json header(const std::string& command, const std::string& name, const std::string& text) {
    return Json{{"command", command}, {"input", name}, {"input_digest", io::digest(text)}};
}

// Runs body; library errors become a report with the mapped exit code.
template <class Body>
RunReport guarded(const std::string& command, const std::string& name, const std::string& text, Body&& body) {
    RunReport r;
    r.json = header(command, name, text);
    try {
        body(r);
    } catch (const Error& e) {
        r.exit_code = exit_code_for(e.kind());
        const std::string kind(to_string(e.kind()));
        std::string message = e.what();
        if (message.rfind(kind + ": ", 0) == 0) message.erase(0, kind.size() + 2);
        r.json["error"] = Json{{"kind", kind}, {"message", message}};
        r.json["verdict"] = r.exit_code == 1 ? "check-failed" : "invalid-input";
        r.text += std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        r.exit_code = 2;
        r.json["error"] = Json{{"kind", "Internal"}, {"message", e.what()}};
        r.json["verdict"] = "invalid-input";
        r.text += std::string("error: ") + e.what() + "\n";
    }
    r.json["exit_code"] = r.exit_code;
    r.text = command + " " + name + "\n" + r.text + "exit " + std::to_string(r.exit_code) + "\n";
    return r;
}

Json sign_json(const std::optional<int>& s) { return s ? Json(*s) : Json(nullptr); }

std::string sign_text(const std::optional<int>& s) {
    if (!s) return "exempt";
    return *s > 0 ? "+1" : "-1";
}

Json one_based(const std::vector<std::size_t>& xs) {
    Json out = Json::array();
    for (auto x : xs) out.push_back(x + 1);
    return out;
}

Json rationals(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(io::rational_to_json(x));
    return out;
}

Json index_pairs(const std::vector<WeightIndex>& xs) {
    Json out = Json::array();
    for (const auto& [i, s] : xs) out.push_back(Json::array({i + 1, s + 1}));
    return out;
}

Json valuation_json(long v) { return v == Dvr::kInfinite ? Json("inf") : Json(v); }

Json position_json(const GeneralPositionReport& r) {
    Json out{{"c_gp", io::rational_to_json(r.c_gp)},
             {"multiplier", io::rational_to_json(r.multiplier)},
             {"holds", r.holds}};
    out["min_gap"] = r.min_gap ? io::rational_to_json(*r.min_gap) : Json(nullptr);
    out["margin"] = r.margin ? io::rational_to_json(*r.margin) : Json(nullptr);
    out["closest_pair"] = r.min_gap ? Json::array({index_pairs(r.worst_i), index_pairs(r.worst_j)}) : Json(nullptr);
    return out;
}

std::string position_text(const GeneralPositionReport& r) {
    std::ostringstream os;
    os << "general position: c = " << r.c_gp << ", multiplier " << r.multiplier;
    if (r.min_gap) os << ", min gap " << *r.min_gap << ", margin " << *r.margin;
    os << (r.holds ? " -> holds" : " -> fails") << "\n";
    return os.str();
}

std::vector<std::size_t> parse_perm(const std::string& arg, std::size_t m) {
    const std::string prefix = "explicit:";
    if (arg.rfind(prefix, 0) != 0) fail(ErrorKind::ParseError, "--perm must be 'cycle' or 'explicit:i1,i2,...'");
    std::vector<std::size_t> out;
    std::stringstream ss(arg.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long x = 0;
        try {
            x = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || x < 1 || static_cast<std::size_t>(x) > m)
            fail(ErrorKind::ParseError, "--perm entry '" + item + "' is not a row number between 1 and " + std::to_string(m));
        out.push_back(static_cast<std::size_t>(x - 1));
    }
    return out;
}

Rational parse_flag_rational(const std::string& flag, const std::string& value) {
    try {
        return io::parse_rational(Json(value), "");
    } catch (const Error&) {
        fail(ErrorKind::ParseError, flag + " must be an integer or p/q, got '" + value + "'");
    }
}

}  // namespace

RunReport unreadable(const std::string& command, const std::string& name, const std::string& why) {
    return guarded(command, name, "", [&](RunReport&) { fail(ErrorKind::ParseError, "cannot read input: " + why); });
}

RunReport cmd_sign(const std::string& text, const std::string& name) {
    return guarded("sign", name, text, [&](RunReport& r) {
        const InvolutiveRep rep = io::parse_rep(io::parse_document(text));
        const auto cs = composition_series(GroupModule{rep.group.group(), rep.images});
        const auto all = sorted_factors(rep, cs);

        // merge isomorphic factors; repeated ones are exempt from the verdict
        std::vector<InvolutiveRep> distinct;
        std::vector<std::size_t> mult;
        for (const auto& f : all) {
            bool found = false;
            for (std::size_t i = 0; i < distinct.size() && !found; ++i)
                if (isomorphic(distinct[i], f)) {
                    ++mult[i];
                    found = true;
                }
            if (!found) {
                distinct.push_back(f);
                mult.push_back(1);
            }
        }
        std::vector<InvolutiveRep> single;
        for (std::size_t i = 0; i < distinct.size(); ++i)
            if (mult[i] == 1) single.push_back(distinct[i]);
        const GoodnessReport g = goodness(single);

        Json factors = Json::array();
        std::ostringstream os;
        os << "field " << rep.field.describe() << ", group order " << rep.group.order() << ", dimension " << rep.dim
           << "\n";
        std::size_t k = 0;
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            Json f{{"dim", distinct[i].dim}, {"multiplicity", mult[i]}};
            if (mult[i] > 1) {
                f["status"] = "repeated";
                f["sign"] = nullptr;
                f["witness"] = nullptr;
                os << "factor " << i + 1 << ": dim " << distinct[i].dim << ", multiplicity " << mult[i]
                   << ", exempt\n";
            } else {
                const FactorReport& fr = g.factors[k++];
                f["status"] = fr.polarized ? "polarized" : "exempt";
                f["sign"] = sign_json(fr.sign);
                f["witness"] = fr.witness ? io::matrix_to_json(fr.witness->a) : Json(nullptr);
                os << "factor " << i + 1 << ": dim " << distinct[i].dim << ", "
                   << (fr.polarized ? "polarized, sign " + sign_text(fr.sign) : std::string("not polarized, exempt"));
                if (fr.witness) os << ", witness " << to_string(fr.witness->a);
                os << "\n";
            }
            factors.push_back(std::move(f));
        }
        r.json["field"] = rep.field.describe();
        r.json["group_order"] = rep.group.order();
        r.json["dim"] = rep.dim;
        r.json["factors"] = factors;
        r.json["verdict"] = g.good ? "good" : "not-good";
        r.exit_code = g.good ? 0 : 1;
        os << "verdict: " << (g.good ? "good" : "not good") << "\n";
        r.text += os.str();
    });
}

RunReport cmd_specialize(const std::string& text, const std::string& name, std::optional<std::size_t> precision) {
    return guarded("specialize", name, text, [&](RunReport& r) {
        const Json doc = io::parse_document(text);
        const DvrRep rep = io::parse_family(doc);
        std::size_t n = 32;
        if (auto p = io::family_precision(doc)) n = *p;
        if (precision) n = *precision;
        require(n >= 1, ErrorKind::InvalidPrecision, "precision must be at least 1");
        const SpecializeReport s = specialize_sign(rep, n);

        std::ostringstream os;
        os << "ring " << rep.dvr.describe() << ", precision " << n << "\n";
        auto fiber = [&](const char* label, const std::vector<FiberFactor>& fs) {
            Json arr = Json::array();
            os << label << ":";
            for (const auto& f : fs) {
                arr.push_back(Json{{"dim", f.dim}, {"polarized", f.polarized}, {"sign", sign_json(f.sign)}});
                os << " [dim " << f.dim << ", " << sign_text(f.sign) << "]";
            }
            os << "\n";
            return arr;
        };
        r.json["ring"] = rep.dvr.describe();
        r.json["precision"] = n;
        r.json["generic"] = fiber("generic", s.generic);
        r.json["residual"] = fiber("residual", s.residual);
        r.json["generic_good"] = s.generic_good;
        r.json["residual_good"] = s.residual_good;
        r.json["counts_equal"] = s.counts_equal;
        r.json["converse_checked"] = s.converse_checked;
        Json matching = Json::array();
        for (const auto& m : s.matching) matching.push_back(one_based(m));
        r.json["matching"] = matching;

        Json shortcuts = Json::array();
        for (const auto& c : s.shortcuts) {
            shortcuts.push_back(Json{{"generic_factor", c.generic_factor + 1},
                                     {"reduced_witness_invertible", c.reduced_witness_invertible},
                                     {"residual_sign", sign_json(c.residual_sign)}});
            os << "factor " << c.generic_factor + 1 << ": residually irreducible, reduced witness gives sign "
               << sign_text(c.residual_sign) << "\n";
        }
        r.json["shortcuts"] = shortcuts;
        Json lifts = Json::array();
        for (const auto& l : s.lifts) {
            Json hist = Json::array();
            for (long v : l.lift.defect_history) hist.push_back(v);
            lifts.push_back(Json{{"generic_factor", l.generic_factor + 1},
                                 {"residual_factor", l.residual_factor + 1},
                                 {"iterations", l.lift.iterations},
                                 {"defect_history", hist},
                                 {"defect_valuation", valuation_json(l.lift.defect_valuation)},
                                 {"tau_fixed", l.lift.tau_fixed},
                                 {"residual_rank", l.lift.residual_rank},
                                 {"trace_congruent", l.lift.trace_congruent},
                                 {"ae_symmetric", l.lift.ae_symmetric},
                                 {"algebra_isomorphism_certified", l.algebra_isomorphism_certified}});
            os << "factor " << l.generic_factor + 1 << " -> residual " << l.residual_factor + 1 << ": idempotent after "
               << l.lift.iterations << " steps, rank " << l.lift.residual_rank << ", tau-fixed "
               << (l.lift.tau_fixed ? "yes" : "no") << ", A*e symmetric " << (l.lift.ae_symmetric ? "yes" : "no")
               << "\n";
        }
        r.json["lifts"] = lifts;
        r.json["verdict"] = "propagation-verified";
        os << "generic " << (s.generic_good ? "good" : "not good") << ", residual "
           << (s.residual_good ? "good" : "not good") << ": propagation verified\n";
        r.text += os.str();
    });
}

RunReport cmd_refine(const std::string& text, const std::string& name, const std::string& perm,
                     const std::optional<std::string>& bound) {
    return guarded("refine", name, text, [&](RunReport& r) {
        const WeightSlopeData data = io::parse_weights(io::parse_document(text));
        std::optional<std::vector<std::size_t>> p;
        if (perm != "cycle") p = parse_perm(perm, data.m);
        std::optional<Rational> c;
        if (bound) c = parse_flag_rational("--bound", *bound);

        RefinePipeline run = refine(data, p);
        std::ostringstream os;
        r.json["weights"] = io::weights_to_json(data);
        r.json["general_position"] = position_json(run.position);
        os << position_text(run.position);
        r.json["weak_admissibility"] = weak_admissibility_product(data);
        if (!run.position.holds) {
            r.json["verdict"] = "fails";
            r.exit_code = 1;
            os << "verdict: fails\n";
            r.text += os.str();
            return;
        }
        if (c) {
            // user-supplied bound: rescan at the point it requires
            run.bound = *c;
            auto moved = moved_point(run.matching.matched, run.choice, *c);
            run.move_factor = moved.second;
            run.scan = scan_admissible_obstructions(moved.first, run.choice, *c);
            run.passed = run.partial_sums.holds && run.partial_sums.bound_consistent &&
                         run.partial_sums.bound_positive && run.scan.implication_checked;
        }
        r.json["matching"] = Json{{"order", one_based(run.matching.order)}, {"slopes", rationals(run.matching.matched.v)}};
        os << "matched slopes:";
        for (const auto& v : run.matching.matched.v) os << " " << v;
        os << "\n";
        r.json["refinement"] = Json{{"perm", one_based(run.choice.perm)}, {"s", rationals(run.choice.s)}};
        os << "offsets s:";
        for (const auto& v : run.choice.s) os << " " << v;
        os << "\n";
        const auto& ps = run.partial_sums;
        r.json["partial_sums"] = Json{{"holds", ps.holds},
                                      {"subsets", ps.subsets},
                                      {"min_abs", ps.min_abs ? io::rational_to_json(*ps.min_abs) : Json(nullptr)},
                                      {"witness", one_based(ps.witness)},
                                      {"bound_consistent", ps.bound_consistent},
                                      {"bound_positive", ps.bound_positive}};
        os << "partial sums over " << ps.subsets << " subsets: " << (ps.holds ? "all nonzero" : "a zero sum");
        if (ps.min_abs) os << ", min |sum| " << *ps.min_abs;
        os << "\n";
        Json obs = Json::array();
        for (const auto& o : run.scan.obstructions) obs.push_back(Json{{"rows", one_based(o.rows)}, {"weights", index_pairs(o.weights)}});
        r.json["scan"] = Json{{"bound", io::rational_to_json(run.bound)},
                              {"weight_scale", run.move_factor.str()},
                              {"separated", run.scan.zc_member},
                              {"obstructions", obs},
                              {"irreducibility_checked", run.scan.implication_checked}};
        os << "scan at weights x" << run.move_factor << " with bound " << run.bound << ": " << obs.size()
           << " obstructions\n";
        r.json["verdict"] = run.passed ? "passes" : "fails";
        r.exit_code = run.passed ? 0 : 1;
        os << "verdict: " << (run.passed ? "passes" : "fails") << "\n";
        r.text += os.str();
    });
}

RunReport cmd_h3(const std::string& text, const std::string& name, const std::string& multiplier) {
    return guarded("h3", name, text, [&](RunReport& r) {
        const WeightSlopeData data = io::parse_weights(io::parse_document(text));
        const Rational mult = parse_flag_rational("--multiplier", multiplier);
        const GeneralPositionReport g = general_position(data, mult);
        r.json["general_position"] = position_json(g);
        r.json["verdict"] = g.holds ? "holds" : "fails";
        r.exit_code = g.holds ? 0 : 1;
        r.text += position_text(g);
    });
}

}  // namespace signrep::cli
