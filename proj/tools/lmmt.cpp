// lmmt: command line front end for the lmmt library.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "lmmt/claims.hpp"
#include "lmmt/cohomology.hpp"
#include "lmmt/forms.hpp"
#include "lmmt/json_io.hpp"
#include "lmmt/multimoment.hpp"
#include "lmmt/salamon.hpp"
#include "lmmt/spectral.hpp"

using namespace lmmt;

namespace {

struct Options {
    bool json = false;
    std::vector<std::string> params;
    std::string field;  // "sqrt=d"
    std::vector<std::string> degrees_text;
    unsigned degree = 0;
    std::string ideal;
    std::string eig_range = "1..3";
    std::string filter;
    std::string form;
    unsigned form_dim = 0;
    std::vector<std::string> vectors;
    unsigned level = 2;
    unsigned max_q = 4;
    std::vector<std::string> positional;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what(), e.byte);
    }
}

std::pair<std::string, std::string> split_assignment(const std::string& text, const char* what) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(std::string("expected name=value for ") + what, 0);
    return {text.substr(0, eq), text.substr(eq + 1)};
}

ParameterMap parameters(const Options& o) {
    ParameterMap p;
    for (const auto& text : o.params) {
        auto [name, value] = split_assignment(text, "--param");
        p[name] = parse_rational(value);
    }
    return p;
}

/// 0 when --field was not given.
long field_of(const Options& o) {
    if (o.field.empty()) return 0;
    auto [name, value] = split_assignment(o.field, "--field");
    if (name != "sqrt") throw ParseError("--field expects sqrt=d", 0);
    long d = 0;
    try {
        d = std::stol(value);
    } catch (const std::exception&) {
        throw ParseError("--field expects an integer d", name.size() + 1);
    }
    if (d < 1) throw Error("--field needs d >= 1");
    return d;
}

LieAlgebra load_algebra(const std::string& text, const Options& o) {
    if (text.starts_with("builtin:")) return builtin_algebra(text.substr(8));
    if (text.starts_with("@")) {
        const Json j = read_json_file(text.substr(1));
        if (j.is_object() && j.contains("salamon")) return parse_salamon(j.at("salamon").get<std::string>(), parameters(o));
        try {
            return algebra_from_json(j.is_object() && j.contains("algebra") ? j.at("algebra") : j);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed algebra JSON: ") + e.what(), 0);
        }
    }
    SalamonParse sp = parse_salamon_checked(text, parameters(o));
    for (const auto& w : sp.warnings) std::cerr << "warning: " << w << "\n";
    return std::move(sp.algebra);
}

bool is_builtin_form(std::string_view s) {
    return s == "g2" || s == "spin7" || s == "psu3" || s == "cvol6" || s.starts_with("symplectic:") ||
           s.starts_with("volume:");
}

/// Form from a builtin name, @file.json or inline text; n = 0 lets inline text pick the dimension.
KForm load_form(std::string text, unsigned n, const Options& o) {
    if (text.empty()) throw Error("missing --form");
    if (text.starts_with("builtin:")) text = text.substr(8);
    KForm f;
    if (is_builtin_form(text)) {
        long field = field_of(o);
        if (field == 0) field = text == "psu3" ? 3 : 1;
        f = builtin_form(text, field);
    } else if (text.starts_with("@")) {
        try {
            // reports that carry a form (construct-nondeg, mm-solve) nest it
            const Json j = read_json_file(text.substr(1));
            f = form_from_json(j.is_object() && j.contains("form") ? j.at("form") : j);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed form JSON: ") + e.what(), 0);
        }
    } else {
        f = parse_form_text(text, n);
    }
    if (n != 0 && f.dimension() != n) {
        throw DimensionError("form lives on R^" + std::to_string(f.dimension()) + ", algebra has dimension " +
                             std::to_string(n));
    }
    return f;
}

std::vector<unsigned> parse_index_list(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw ParseError(std::string("bad entry '") + item + "' in " + what, pos);
        }
        pos += item.size() + 1;
    }
    if (out.empty()) throw ParseError(std::string("empty list for ") + what, 0);
    return out;
}

std::vector<unsigned> degrees_of(const Options& o) {
    std::vector<unsigned> out;
    for (const auto& t : o.degrees_text) {
        for (unsigned d : parse_index_list(t, "--degrees")) out.push_back(d);
    }
    return out;
}

/// "X2" or "1,0,-1/2".
Vector parse_vector(const std::string& text, unsigned n) {
    if ((text.starts_with("X") || text.starts_with("E")) && text.size() > 1) {
        const unsigned i = parse_index_list(text.substr(1), "vector")[0];
        if (i == 0 || i > n) throw DimensionError("basis vector " + text + " out of range");
        return unit_vector(n, i - 1);
    }
    Vector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_scalar(item));
    if (v.size() != n) throw DimensionError("vector '" + text + "' needs " + std::to_string(n) + " entries");
    return v;
}

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

std::string list_text(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Json forms_json(const std::vector<KForm>& fs) {
    Json a = Json::array();
    for (const auto& f : fs) a.push_back(f.to_string());
    return a;
}

Json vectors_json(const std::vector<Vector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

std::string vector_text(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

void emit(const Options& o, const Json& j, const std::function<void()>& human) {
    if (o.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        human();
    }
}

const std::string& arg(const Options& o, std::size_t i, const char* what) {
    if (o.positional.size() <= i) throw Error(std::string("missing argument: ") + what);
    return o.positional[i];
}

// ---------------------------------------------------------------- commands

int cmd_parse(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const StructuralReport r = structural_report(g);
    std::string salamon;
    try {
        salamon = to_salamon(g);
    } catch (const Error&) {
    }
    Json j;
    j["dim"] = g.dimension();
    if (!salamon.empty()) j["salamon"] = salamon;
    j["derived_series"] = sizes(r.derived_series);
    j["lower_central_series"] = sizes(r.lower_central_series);
    j["solvable"] = r.solvable;
    j["nilpotent"] = r.nilpotent;
    j["unimodular"] = r.unimodular;
    j["derived_codimension"] = r.derived_codimension;
    j["algebra"] = algebra_to_json(g);
    emit(o, j, [&] {
        std::cout << "dimension            " << g.dimension() << "\n";
        if (!salamon.empty()) std::cout << "salamon              (" << salamon << ")\n";
        std::cout << "derived series       " << list_text(r.derived_series) << "\n"
                  << "lower central series " << list_text(r.lower_central_series) << "\n"
                  << "solvable             " << (r.solvable ? "yes" : "no") << "\n"
                  << "nilpotent            " << (r.nilpotent ? "yes" : "no") << "\n"
                  << "unimodular           " << (r.unimodular ? "yes" : "no") << "\n"
                  << "codim g'             " << r.derived_codimension << "\n";
    });
    return 0;
}

int cmd_betti(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const CohomologyReport r = betti(g);
    Json j;
    j["betti"] = sizes(r.betti);
    j["z"] = sizes(r.cycles);
    j["b"] = sizes(r.boundaries);
    j["unimodular"] = r.unimodular;
    emit(o, j, [&] {
        std::cout << "betti " << list_text(r.betti) << "\n";
        std::cout << " k  dim Λ^k  dim Z^k  dim B^k  b_k\n";
        for (std::size_t k = 0; k < r.betti.size(); ++k) {
            std::printf("%2zu %8zu %8zu %8zu %4zu\n", k, r.chains[k], r.cycles[k], r.boundaries[k], r.betti[k]);
        }
        std::cout << "unimodular " << (r.unimodular ? "yes" : "no") << "\n";
    });
    return 0;
}

int cmd_trivial(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    auto degrees = degrees_of(o);
    if (degrees.empty()) degrees = {3, 4};
    const TrivialityResult t = is_trivial(g, degrees);
    Json j;
    j["degrees"] = degrees;
    j["trivial"] = t.trivial;
    j["betti"] = sizes(t.betti);
    if (t.failing_degree) j["failing_degree"] = *t.failing_degree;
    if (t.witness) j["witness"] = form_to_json(*t.witness);
    emit(o, j, [&] {
        std::cout << (t.trivial ? "true" : "false") << "\n";
        for (std::size_t i = 0; i < degrees.size(); ++i) std::cout << "  b" << degrees[i] << " = " << t.betti[i] << "\n";
        if (t.witness) std::cout << "  witness in degree " << *t.failing_degree << ": " << t.witness->to_string() << "\n";
    });
    return 0;
}

int cmd_lie_kernel(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    if (o.degree == 0) throw Error("lie-kernel needs --degree k");
    const LieKernelBasis k = lie_kernel(g, o.degree);
    Json basis = Json::array();
    for (const auto& v : k.basis) basis.push_back(v.to_string());
    Json j;
    j["degree"] = o.degree;
    j["dim"] = k.basis.size();
    j["basis"] = basis;
    emit(o, j, [&] {
        std::cout << "dim P(g," << o.degree << ") = " << k.basis.size() << "\n";
        for (const auto& v : k.basis) std::cout << "  " << v.to_string() << "\n";
    });
    return 0;
}

int cmd_kunneth(const Options& o) {
    const LieAlgebra h1 = load_algebra(arg(o, 0, "first algebra"), o);
    const LieAlgebra h2 = load_algebra(arg(o, 1, "second algebra"), o);
    const KunnethReport k = kunneth_check(h1, h2);
    Json j;
    j["b3"] = {{"direct", k.b3_direct}, {"formula", k.b3_formula}, {"holds", k.b3_holds}};
    j["b4"] = {{"direct", k.b4_direct}, {"formula", k.b4_formula}, {"holds", k.b4_holds}};
    emit(o, j, [&] {
        std::cout << "b3: direct " << k.b3_direct << ", formula " << k.b3_formula << (k.b3_holds ? "  holds" : "  FAILS")
                  << "\n";
        std::cout << "b4: direct " << k.b4_direct << ", formula " << k.b4_formula << (k.b4_holds ? "  holds" : "  FAILS")
                  << "\n";
    });
    return 0;
}

int cmd_cartan(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const unsigned n = g.dimension();
    const KForm alpha = load_form(o.form, n, o);
    std::vector<Vector> p;
    for (const auto& v : o.vectors) p.push_back(parse_vector(v, n));
    const CartanReport r = cartan_identity_check(g, alpha, p);
    Json j;
    j["holds"] = r.holds;
    j["invariant"] = r.invariant;
    j["lhs"] = r.lhs.to_string();
    j["lie_term"] = r.lie_term.to_string();
    j["bracket_term"] = r.bracket_term.to_string();
    emit(o, j, [&] {
        std::cout << (r.holds ? "holds" : "FAILS") << (r.invariant ? " (invariant form)" : "") << "\n"
                  << "  p⌟dα - (-1)^s d(p⌟α) = " << r.lhs.to_string() << "\n"
                  << "  (⌟L)_P α             = " << r.lie_term.to_string() << "\n"
                  << "  L(P)⌟α               = " << r.bracket_term.to_string() << "\n";
    });
    return 0;
}

const char* status_name(MultimomentSolution::Status s) {
    switch (s) {
        case MultimomentSolution::Status::unique: return "unique";
        case MultimomentSolution::Status::non_unique: return "non-unique";
        case MultimomentSolution::Status::no_existence: return "no-existence";
    }
    return "";
}

int cmd_mm_solve(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const KForm psi = load_form(o.form, g.dimension(), o);
    const MultimomentSolution s = solve_multimoment(g, psi);
    Json j;
    j["status"] = status_name(s.status);
    if (s.nu) j["nu"] = form_to_json(s.nu->representative);
    j["kernel"] = forms_json(s.kernel);
    j["obstruction_dimension"] = s.obstruction_dimension;
    if (s.obstruction) j["obstruction"] = s.obstruction->to_string();
    emit(o, j, [&] {
        std::cout << status_name(s.status) << "\n";
        if (s.nu) std::cout << "  nu = [" << s.nu->representative.to_string() << "]\n";
        for (const auto& k : s.kernel) std::cout << "  + t [" << k.to_string() << "]\n";
        std::cout << "  dim H^" << psi.degree() << " = " << s.obstruction_dimension << "\n";
        if (s.obstruction) std::cout << "  obstruction " << s.obstruction->to_string() << "\n";
    });
    return 0;
}

int cmd_orbit(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const KForm beta = load_form(o.form, g.dimension(), o);
    const OrbitCondition c = orbit_stab_condition(g, PDualElement{beta.degree(), beta});
    Json j;
    j["holds"] = c.holds;
    j["stabilizer"] = vectors_json(c.stabilizer);
    j["kernel"] = vectors_json(c.kernel);
    emit(o, j, [&] {
        std::cout << (c.holds ? "stab = ker d_P β" : "stab != ker d_P β") << "\n";
        std::cout << "  stab (dim " << c.stabilizer.size() << ")\n";
        for (const auto& v : c.stabilizer) std::cout << "    " << vector_text(v) << "\n";
        std::cout << "  ker  (dim " << c.kernel.size() << ")\n";
        for (const auto& v : c.kernel) std::cout << "    " << vector_text(v) << "\n";
    });
    return 0;
}

IdealSplit split_of(const LieAlgebra& g, const Options& o) {
    if (o.ideal.empty()) {
        // default: g' when it has codimension one or two
        const auto d = derived_algebra(g);
        if (g.dimension() - d.size() > 2) throw Error("--ideal is required when codim g' > 2");
        return make_split(g, d);
    }
    return make_split(g, parse_index_list(o.ideal, "--ideal"));
}

int cmd_invariant(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const IdealSplit split = split_of(g, o);
    const InvariantCohomology ic = invariant_cohomology(split, o.degree);
    Json ops = Json::array();
    for (const auto& m : ic.operators) ops.push_back(to_json(m));
    Json j;
    j["degree"] = ic.degree;
    j["cohomology_dim"] = ic.cohomology_dim;
    j["invariant_dim"] = ic.invariant_dim;
    j["classes"] = forms_json(ic.classes);
    j["operators"] = ops;
    j["invariant"] = forms_json(ic.invariant);
    emit(o, j, [&] {
        std::cout << "dim H^" << ic.degree << "(k)   = " << ic.cohomology_dim << "\n"
                  << "dim H^" << ic.degree << "(k)^g = " << ic.invariant_dim << "\n";
        for (const auto& f : ic.invariant) std::cout << "  " << f.to_string() << "\n";
    });
    return 0;
}

int cmd_hs_page(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const IdealSplit split = split_of(g, o);
    const SpectralPage page = hs_page(split, o.level, o.max_q);
    Json rows = Json::array();
    for (unsigned q = 0; q <= o.max_q; ++q) {
        Json row = Json::array();
        for (unsigned p = 0; p <= page.quotient_dim; ++p) row.push_back(page.at(p, q));
        rows.push_back(row);
    }
    Json j;
    j["level"] = page.level;
    j["quotient_dim"] = page.quotient_dim;
    j["rows"] = rows;
    emit(o, j, [&] {
        std::cout << "E" << page.level << " page, dim a = " << page.quotient_dim << "\n   q\\p";
        for (unsigned p = 0; p <= page.quotient_dim; ++p) std::printf("%5u", p);
        std::cout << "\n";
        for (unsigned q = o.max_q + 1; q-- > 0;) {
            std::printf("%5u ", q);
            for (unsigned p = 0; p <= page.quotient_dim; ++p) std::printf("%5zu", page.at(p, q));
            std::cout << "\n";
        }
    });
    return 0;
}

Json verdict_json(const IdealVerdict& v) {
    return {{"ideal", vectors_json(v.ideal)}, {"invariant", v.invariant}, {"vanishes", v.vanishes}};
}

int cmd_verify34(const Options& o) {
    const LieAlgebra g = load_algebra(arg(o, 0, "algebra"), o);
    const Structure34Report r = verify_34_structure(g);
    Json ideals = Json::array();
    for (const auto& v : r.codim_one) ideals.push_back(verdict_json(v));
    Json j;
    j["direct"] = r.direct;
    j["solvable"] = r.solvable;
    j["codim"] = r.codim;
    j["codim_one"] = ideals;
    j["theorem_side"] = r.theorem_side;
    if (r.derived) j["derived"] = verdict_json(*r.derived);
    if (r.proposition_side) j["proposition_side"] = *r.proposition_side;
    j["consistent"] = r.consistent;
    emit(o, j, [&] {
        std::cout << "(3,4)-trivial (Betti)        " << (r.direct ? "yes" : "no") << "\n"
                  << "solvable                     " << (r.solvable ? "yes" : "no") << "\n"
                  << "codim g'                     " << r.codim << "\n"
                  << "codim-1 ideals checked       " << r.codim_one.size() << "\n"
                  << "H^{2,3,4}(k)^g = 0 for all   " << (r.theorem_side ? "yes" : "no") << "\n";
        if (r.proposition_side) {
            std::cout << "H^{1..4}(g')^g = 0           " << (*r.proposition_side ? "yes" : "no") << "\n";
        }
        std::cout << "consistent                   " << (r.consistent ? "yes" : "NO") << "\n";
    });
    return 0;
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("--eig-range expects a..b", 0);
    try {
        return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("--eig-range expects integers a..b", 0);
    }
}

int cmd_search34(const Options& o) {
    const unsigned m = parse_index_list(arg(o, 0, "m"), "m")[0];
    const auto [lo, hi] = parse_range(o.eig_range);
    const ExtensionSearch s = search_34_extensions(m, lo, hi);
    auto cert = [](const ExtensionCertificate& c) {
        return Json{{"algebra", to_salamon(c.algebra)},
                    {"lambdas", c.lambdas},
                    {"criterion", c.criterion},
                    {"betti", c.betti},
                    {"trivial34", c.trivial34},
                    {"agrees", c.agrees}};
    };
    Json acc = Json::array(), dis = Json::array();
    for (const auto& c : s.accepted) acc.push_back(cert(c));
    for (const auto& c : s.disagreements) dis.push_back(cert(c));
    Json j;
    j["examined"] = s.examined;
    j["accepted"] = acc;
    j["disagreements"] = dis;
    emit(o, j, [&] {
        std::cout << s.examined << " tuples, " << s.accepted.size() << " pass the criterion, " << s.disagreements.size()
                  << " disagreements\n";
        for (const auto& c : s.accepted) {
            std::cout << "  (" << to_salamon(c.algebra) << ")  betti " << list_text(c.betti) << "\n";
        }
        for (const auto& c : s.disagreements) std::cout << "  DISAGREES (" << to_salamon(c.algebra) << ")\n";
    });
    return s.disagreements.empty() ? 0 : 3;
}

int cmd_stabilizer(const Options& o) {
    const KForm alpha = load_form(o.form, o.form_dim, o);
    const Stabilizer s = stabilizer_algebra(alpha);
    Json basis = Json::array();
    for (const auto& m : s.basis) basis.push_back(to_json(m));
    Json j;
    j["dim"] = s.dimension;
    j["basis"] = basis;
    emit(o, j, [&] { std::cout << "dim stab = " << s.dimension << "\n"; });
    return 0;
}

int cmd_stable(const Options& o) {
    const KForm alpha = load_form(o.form, o.form_dim, o);
    const FormAnalysis fa = is_stable(alpha);
    const std::size_t space = binomial(alpha.dimension(), alpha.degree());
    Json j;
    j["n"] = alpha.dimension();
    j["degree"] = alpha.degree();
    j["stabilizer_dim"] = fa.stabilizer_dim;
    j["orbit_dim"] = fa.orbit_dim;
    j["space_dim"] = space;
    j["stable"] = fa.stable;
    emit(o, j, [&] {
        std::cout << (fa.stable ? "stable" : "not stable") << ": orbit dim " << fa.orbit_dim << " = "
                  << alpha.dimension() * alpha.dimension() << " - " << fa.stabilizer_dim << ", dim Λ^"
                  << alpha.degree() << " = " << space << "\n";
    });
    return 0;
}

int cmd_nondeg(const Options& o) {
    const KForm alpha = load_form(o.form, o.form_dim, o);
    const FormAnalysis fa = weak_nondegenerate(alpha);
    Json j;
    j["weakly_nondegenerate"] = fa.weakly_nondegenerate;
    j["kernel"] = vectors_json(fa.kernel);
    emit(o, j, [&] {
        std::cout << (fa.weakly_nondegenerate ? "non-degenerate" : "degenerate") << "\n";
        for (const auto& v : fa.kernel) std::cout << "  kernel " << vector_text(v) << "\n";
    });
    return 0;
}

int cmd_normal_form(const Options& o) {
    const KForm omega = load_form(o.form, o.form_dim, o);
    const TwoFormNormalForm nf = two_form_normal_form(omega);
    Json j;
    j["k"] = nf.k;
    j["rank"] = 2 * nf.k;
    j["covectors"] = vectors_json(nf.covectors);
    j["basis_change"] = to_json(nf.basis_change);
    emit(o, j, [&] {
        std::cout << "rank " << 2 * nf.k << " (k = " << nf.k << ")\n";
        for (std::size_t i = 0; i < nf.covectors.size(); ++i) {
            std::cout << "  f" << i + 1 << " = " << covector_of(nf.covectors[i]).to_string() << "\n";
        }
    });
    return 0;
}

int cmd_construct(const Options& o) {
    const unsigned r = parse_index_list(arg(o, 0, "r"), "r")[0];
    const unsigned n = parse_index_list(arg(o, 1, "n"), "n")[0];
    const auto f = construct_nondegenerate(r, n);
    Json j;
    j["r"] = r;
    j["n"] = n;
    j["exists"] = f.has_value();
    if (f) {
        j["form"] = form_to_json(*f);
        j["weakly_nondegenerate"] = weak_nondegenerate(*f).weakly_nondegenerate;
    }
    emit(o, j, [&] {
        if (!f) {
            std::cout << "impossible: no non-degenerate " << r << "-form on R^" << n << "\n";
        } else {
            std::cout << f->to_string() << "\n";
        }
    });
    return 0;
}

int cmd_identities(const Options& o) {
    auto names = o.positional;
    if (names.empty()) names = holonomy_identity_names();
    Json arr = Json::array();
    bool all = true;
    std::vector<HolonomyIdentity> ids;
    for (const auto& n : names) {
        ids.push_back(holonomy_identity(n));
        const auto& h = ids.back();
        all = all && h.holds;
        arr.push_back({{"name", h.name}, {"holds", h.holds}, {"computed", h.computed}, {"expected", h.expected}});
    }
    emit(o, arr, [&] {
        for (const auto& h : ids) {
            std::cout << (h.holds ? "ok    " : "FAIL  ") << h.name << "\n";
            if (!h.holds) std::cout << "      computed " << h.computed << "\n      expected " << h.expected << "\n";
        }
    });
    return all ? 0 : 3;
}

int cmd_verify_paper(const Options& o) {
    const auto results = run_claims(o.filter);
    if (results.empty()) throw Error("no claim matches --filter '" + o.filter + "'");
    std::size_t failed = 0;
    Json arr = Json::array();
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        arr.push_back({{"id", r.id},
                       {"criterion", r.criterion},
                       {"passed", r.passed},
                       {"computed", r.computed},
                       {"expected", r.expected}});
    }
    Json j;
    j["claims"] = arr;
    j["passed"] = results.size() - failed;
    j["failed"] = failed;
    emit(o, j, [&] {
        std::size_t width = 0;
        for (const auto& r : results) width = std::max(width, r.id.size());
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.id << std::string(width - r.id.size() + 2, ' ')
                      << r.computed;
            if (!r.passed) std::cout << "   (expected " << r.expected << ")";
            std::cout << "\n";
        }
        std::cout << results.size() - failed << "/" << results.size() << " claims pass\n";
    });
    return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lie algebra cohomology, multi-moment maps and special forms"};
    app.require_subcommand(1);
    Options o;

    auto add = [&](const char* name, const char* help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_flag("--json", o.json, "print JSON");
        s->add_option("--param", o.params, "bind a parameter, name=rational")->take_all();
        s->add_option("--field", o.field, "quadratic field, sqrt=d");
        return s;
    };
    auto algebra_arg = [&](CLI::App* s, const char* what = "algebra (Salamon string, @file.json or builtin:name)") {
        s->add_option("inputs", o.positional, what)->required();
    };
    auto form_opt = [&](CLI::App* s) {
        s->add_option("--form", o.form, "form: builtin name, @file.json or text like 'e123 + e145'")->required();
        s->add_option("--dim", o.form_dim, "ambient dimension for inline form text");
    };

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands;

    CLI::App* s = add("parse", "validate an algebra and print its structure");
    algebra_arg(s);
    commands.emplace_back(s, cmd_parse);

    s = add("betti", "Betti numbers");
    algebra_arg(s);
    commands.emplace_back(s, cmd_betti);

    s = add("trivial", "test b_k = 0 for the given degrees");
    algebra_arg(s);
    s->add_option("--degrees", o.degrees_text, "comma separated degrees (default 3,4)");
    commands.emplace_back(s, cmd_trivial);

    s = add("lie-kernel", "kernel of L on Λ^k g");
    algebra_arg(s);
    s->add_option("--degree", o.degree, "k")->required();
    commands.emplace_back(s, cmd_lie_kernel);

    s = add("kunneth", "Betti numbers of h1 ⊕ h2 against the Künneth sums");
    algebra_arg(s, "two algebras");
    commands.emplace_back(s, cmd_kunneth);

    s = add("cartan-check", "extended Cartan identity for a form and X_1∧...∧X_s");
    algebra_arg(s);
    form_opt(s);
    s->add_option("--vector", o.vectors, "vector as 'X2' or '1,0,-1/2' (repeat for each factor)")->required();
    commands.emplace_back(s, cmd_cartan);

    s = add("mm-solve", "solve d_P ν = Ψ for a closed form Ψ");
    algebra_arg(s);
    form_opt(s);
    commands.emplace_back(s, cmd_mm_solve);

    s = add("orbit-check", "compare stab β with ker d_P β");
    algebra_arg(s);
    form_opt(s);
    commands.emplace_back(s, cmd_orbit);

    s = add("invariant-cohomology", "H^q(k) and its g-invariant part");
    algebra_arg(s);
    s->add_option("--ideal", o.ideal, "ideal as comma list of basis indices (default g')");
    s->add_option("--degree", o.degree, "q")->required();
    commands.emplace_back(s, cmd_invariant);

    s = add("hs-page", "E1 or E2 page of the Hochschild-Serre sequence");
    algebra_arg(s);
    s->add_option("--ideal", o.ideal, "ideal as comma list of basis indices (default g')");
    s->add_option("--level", o.level, "1 or 2")->check(CLI::Range(1, 2));
    s->add_option("--max-q", o.max_q, "highest row");
    commands.emplace_back(s, cmd_hs_page);

    s = add("verify-34", "(3,4)-triviality directly and via invariant cohomology");
    algebra_arg(s);
    commands.emplace_back(s, cmd_verify34);

    s = add("search34", "diagonal extensions of R^m against the eigenvalue criterion");
    algebra_arg(s, "m");
    s->add_option("--eig-range", o.eig_range, "eigenvalue range a..b");
    commands.emplace_back(s, cmd_search34);

    s = add("stabilizer", "stabilizer algebra of a form in gl(n)");
    form_opt(s);
    commands.emplace_back(s, cmd_stabilizer);

    s = add("stable", "orbit dimension and stability of a form");
    form_opt(s);
    commands.emplace_back(s, cmd_stable);

    s = add("nondeg", "weak non-degeneracy of a form");
    form_opt(s);
    commands.emplace_back(s, cmd_nondeg);

    s = add("normal-form", "normal form of a two-form");
    form_opt(s);
    commands.emplace_back(s, cmd_normal_form);

    s = add("construct-nondeg", "non-degenerate r-form on R^n");
    algebra_arg(s, "r n");
    commands.emplace_back(s, cmd_construct);

    s = add("identities", "G2 and Spin(7) form identities");
    s->add_option("names", o.positional, "g2metric, spin7vol, spin7bivector, spin7split, spin7rank");
    commands.emplace_back(s, cmd_identities);

    s = add("verify-paper", "run every acceptance claim");
    s->add_option("--filter", o.filter, "only claims whose id contains this text");
    commands.emplace_back(s, cmd_verify_paper);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const auto& [sub, fn] : commands) {
            if (sub->parsed()) return fn(o);
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
