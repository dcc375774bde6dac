// binomideal: vanishing ideals of finite point sets over GF(p), binomial /
// lattice classification with witnesses, and monomial parameterizations of
// torus subgroups. JSON in, JSON out, deterministic bytes for fixed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "binomideal/binomideal.hpp"

namespace bi = binomideal;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string input;
    bool affine = false;
    bool oracle = false;
    std::string order = "grevlex";
    std::string poly;
};

std::size_t enumeration_bound() {
    const char* env = std::getenv("BINOMIDEAL_MAX_ENUM");
    if (env == nullptr || *env == '\0') return bi::default_enumeration_bound;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0)
        bi::fail("BadDocument", "BINOMIDEAL_MAX_ENUM must be a positive integer");
    return static_cast<std::size_t>(v);
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) bi::fail("BadDocument", "cannot open input file " + path);
    return ordered_json::parse(in);  // throws nlohmann parse_error with line/column
}

bi::TermOrder parse_order(const std::string& name) {
    if (name == "grevlex") return bi::TermOrder::grevlex();
    if (name == "lex") return bi::TermOrder::lex();
    bi::fail("BadDocument", "unknown term order " + name);
}

struct PointSetDocument {
    std::uint32_t p = 0;
    int s = 0;
    bool projective = true;
    std::vector<std::vector<std::int64_t>> points;
};

PointSetDocument read_point_document(const ordered_json& doc) {
    PointSetDocument out;
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("s") || !doc.contains("points"))
        bi::fail("BadDocument", "point documents need the keys p, s and points");
    out.p = doc.at("p").get<std::uint32_t>();
    out.s = doc.at("s").get<int>();
    if (out.s < 1 || out.s > 8) bi::fail("BadDocument", "s must lie in 1..8");
    out.projective = doc.value("projective", true);
    for (const auto& row : doc.at("points")) {
        std::vector<std::int64_t> pt = row.get<std::vector<std::int64_t>>();
        if (static_cast<int>(pt.size()) != out.s)
            bi::fail("BadDocument", "every point needs exactly s coordinates");
        out.points.push_back(std::move(pt));
    }
    return out;
}

bi::PointSet build_point_set(const bi::FieldContext& F, const PointSetDocument& doc) {
    bi::PointSet Y(F, doc.s,
                   doc.projective ? bi::Ambient::projective : bi::Ambient::affine);
    for (const auto& raw : doc.points) {
        bi::Coords c;
        c.reserve(raw.size());
        for (auto v : raw) c.push_back(F.element(v));
        if (doc.projective)
            Y.insert(bi::ProjectivePoint::normalize(F, c));
        else
            Y.insert(bi::AffinePoint(std::move(c)));
    }
    return Y;
}

ordered_json points_to_json(const bi::PointSet& Y) {
    ordered_json arr = ordered_json::array();
    for (const bi::Coords& c : Y.elements()) {
        ordered_json row = ordered_json::array();
        for (const bi::FieldElement& x : c) row.push_back(x.value);
        arr.push_back(std::move(row));
    }
    return arr;
}

ordered_json coords_to_json(const bi::Coords& c) {
    ordered_json row = ordered_json::array();
    for (const bi::FieldElement& x : c) row.push_back(x.value);
    return row;
}

ordered_json basis_to_json(const std::vector<bi::Polynomial>& basis) {
    ordered_json arr = ordered_json::array();
    for (const bi::Polynomial& g : basis) arr.push_back(bi::to_string(g));
    return arr;
}

ordered_json witness_to_json(const bi::Witness& w) {
    ordered_json out;
    if (std::holds_alternative<bi::BinomialBasisWitness>(w)) {
        out["kind"] = "binomial_basis";
    } else if (std::holds_alternative<bi::MissingIdentityWitness>(w)) {
        out["kind"] = "missing_identity";
    } else if (std::holds_alternative<bi::MonoidViolationWitness>(w)) {
        const auto& v = std::get<bi::MonoidViolationWitness>(w);
        out["kind"] = "monoid_violation";
        out["pair"] = ordered_json::array({coords_to_json(v.a), coords_to_json(v.b)});
    } else if (std::holds_alternative<bi::ZeroDivisorWitness>(w)) {
        const auto& v = std::get<bi::ZeroDivisorWitness>(w);
        out["kind"] = "zero_divisor";
        out["variable"] = v.variable;
        out["polynomial"] = v.poly ? bi::to_string(*v.poly) : "";
    } else {
        out["kind"] = "none";
    }
    return out;
}

ordered_json certificate_to_json(const bi::Certificate& cert) {
    ordered_json out;
    out["is_binomial"] = cert.is_binomial;
    out["is_lattice"] = cert.is_lattice;
    out["dimension"] = cert.dimension;
    out["basis"] = basis_to_json(cert.basis);
    out["witness"] = witness_to_json(cert.witness);
    ordered_json checks;
    checks["monoid_criterion"] = cert.cross_checks.monoid_criterion;
    checks["pure_binomial_gb"] = cert.cross_checks.pure_binomial_gb;
    checks["zero_set_equals_input"] = cert.cross_checks.zero_set_equals_input;
    checks["colon_stable"] =
        cert.cross_checks.colon_stable ? ordered_json(*cert.cross_checks.colon_stable)
                                       : ordered_json(nullptr);
    checks["torus_subgroup"] =
        cert.cross_checks.torus_subgroup ? ordered_json(*cert.cross_checks.torus_subgroup)
                                         : ordered_json(nullptr);
    out["cross_checks"] = std::move(checks);
    return out;
}

void emit(const ordered_json& out) { std::cout << out.dump() << "\n"; }

// enforce both computation routes and their agreement (--oracle)
bi::Ideal ideal_with_options(const bi::PolynomialRing& ring, const bi::PointSet& Y,
                             bool oracle) {
    bi::Ideal I = bi::vanishing_ideal(ring, Y, bi::VanishingMethod::bm);
    if (oracle) {
        bi::Ideal J = bi::vanishing_ideal(ring, Y, bi::VanishingMethod::intersection);
        if (!same_ideal(I, J))
            bi::fail("InternalInconsistency", "bm and intersection methods disagree");
        if (!bi::verify_vanishing(I, Y, enumeration_bound()))
            bi::fail("InternalInconsistency", "vanishing verification failed");
        return J;
    }
    return I;
}

int cmd_classify(const Options& opt) {
    ordered_json doc = load_json(opt.input);
    PointSetDocument psd = read_point_document(doc);
    if (opt.affine) psd.projective = false;
    bi::FieldContext F(psd.p);
    bi::PointSet Y = build_point_set(F, psd);
    if (Y.empty()) bi::fail("EmptySet", "classification needs at least one point");
    bi::PolynomialRing ring(F, psd.s, parse_order(opt.order));
    auto method = opt.oracle ? bi::VanishingMethod::intersection : bi::VanishingMethod::bm;
    if (opt.oracle) (void)ideal_with_options(ring, Y, true);
    bi::Certificate cert = psd.projective
                               ? bi::classify_lattice(ring, Y, method, enumeration_bound())
                               : bi::classify_affine_binomial(ring, Y, method, enumeration_bound());
    emit(certificate_to_json(cert));
    std::cerr << "binomial: " << (cert.is_binomial ? "yes" : "no")
              << ", lattice: " << (cert.is_lattice ? "yes" : "no")
              << ", dimension: " << cert.dimension << "\n";
    return 0;
}

int cmd_ideal(const Options& opt) {
    ordered_json doc = load_json(opt.input);
    PointSetDocument psd = read_point_document(doc);
    if (opt.affine) psd.projective = false;
    bi::FieldContext F(psd.p);
    bi::PointSet Y = build_point_set(F, psd);
    if (Y.empty()) bi::fail("EmptySet", "the vanishing ideal of the empty set is not produced");
    bi::PolynomialRing ring(F, psd.s, parse_order(opt.order));
    bi::Ideal I = ideal_with_options(ring, Y, opt.oracle);
    ordered_json out;
    out["basis"] = basis_to_json(I.reduced_basis());
    emit(out);
    std::cerr << I.reduced_basis().size() << " basis element(s)\n";
    return 0;
}

int cmd_zeroset(const Options& opt) {
    ordered_json doc = load_json(opt.input);
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("s") ||
        !doc.contains("generators"))
        bi::fail("BadDocument", "ideal documents need the keys p, s and generators");
    bi::FieldContext F(doc.at("p").get<std::uint32_t>());
    int s = doc.at("s").get<int>();
    if (s < 1 || s > 8) bi::fail("BadDocument", "s must lie in 1..8");
    bi::PolynomialRing ring(F, s, parse_order(opt.order));
    std::vector<bi::Polynomial> gens;
    for (const auto& g : doc.at("generators"))
        gens.push_back(bi::parse_polynomial(ring, g.get<std::string>()));
    bi::Ideal I(ring, std::move(gens));
    bi::PointSet V = bi::zero_set_projective(I, enumeration_bound());
    ordered_json out;
    out["points"] = points_to_json(V);
    emit(out);
    std::cerr << V.size() << " point(s)\n";
    return 0;
}

int cmd_closure(const Options& opt) {
    ordered_json doc = load_json(opt.input);
    PointSetDocument psd = read_point_document(doc);
    bi::FieldContext F(psd.p);
    if (!psd.projective) bi::fail("BadDocument", "closure expects a projective document");
    bi::PointSet gens = build_point_set(F, psd);
    bi::ClosureResult closure = bi::monoid_closure(gens, enumeration_bound());
    ordered_json out;
    out["points"] = points_to_json(closure.set);
    out["zero"] = closure.zero;
    emit(out);
    std::cerr << closure.set.size() << " point(s)" << (closure.zero ? " plus [0]" : "") << "\n";
    return 0;
}

int cmd_parameterize(const Options& opt) {
    ordered_json doc = load_json(opt.input);
    PointSetDocument psd = read_point_document(doc);
    if (!psd.projective) bi::fail("BadDocument", "parameterize expects a projective document");
    bi::FieldContext F(psd.p);
    bi::PointSet Y = build_point_set(F, psd);
    bi::Parameterization P = bi::extract_parameterization(Y);
    ordered_json out;
    out["p"] = P.p;
    out["n"] = P.n;
    out["d"] = P.d;
    out["beta"] = P.beta.value;
    out["v"] = P.v;
    emit(out);
    std::cerr << "H of order " << P.d << " generated by " << P.beta.value << ", " << P.n
              << " parameter(s)\n";
    return 0;
}

int cmd_enumerate(const Options& opt) {
    ordered_json doc = load_json(opt.input);
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("n") || !doc.contains("d") ||
        !doc.contains("beta") || !doc.contains("v"))
        bi::fail("BadDocument", "parameterization documents need p, n, d, beta and v");
    bi::FieldContext F(doc.at("p").get<std::uint32_t>());
    bi::Parameterization P;
    P.p = doc.at("p").get<std::uint32_t>();
    P.n = doc.at("n").get<int>();
    P.d = doc.at("d").get<std::int64_t>();
    P.beta = F.element(doc.at("beta").get<std::int64_t>());
    P.v = doc.at("v").get<std::vector<std::vector<std::int64_t>>>();
    if (P.n < 0) bi::fail("BadDocument", "n must be non-negative");
    bi::PointSet Y = bi::enumerate_parameterized(F, P, enumeration_bound());
    ordered_json out;
    out["points"] = points_to_json(Y);
    emit(out);
    std::cerr << Y.size() << " point(s)\n";
    return 0;
}

int cmd_decompose(const Options& opt) {
    ordered_json doc = load_json(opt.input);
    PointSetDocument psd = read_point_document(doc);
    if (!psd.projective) bi::fail("BadDocument", "decompose expects a projective document");
    bi::FieldContext F(psd.p);
    bi::PointSet Y = build_point_set(F, psd);
    if (Y.empty()) bi::fail("EmptySet", "decomposition needs at least one point");
    bi::PolynomialRing ring(F, psd.s, parse_order(opt.order));
    bi::Polynomial f = bi::parse_polynomial(ring, opt.poly);
    auto parts = bi::decompose_to_binomials(f, Y);
    ordered_json arr = ordered_json::array();
    for (const auto& [lambda, binom] : parts) {
        ordered_json part;
        part["coefficient"] = lambda.value;
        part["binomial"] = bi::to_string(binom);
        arr.push_back(std::move(part));
    }
    ordered_json out;
    out["parts"] = std::move(arr);
    emit(out);
    std::cerr << parts.size() << " binomial(s)\n";
    return 0;
}

int exit_code_for(const std::string& code) {
    if (code == "ParseError") return 2;
    if (code == "NotPrime" || code == "ZeroVector" || code == "EmptySet" ||
        code == "BadDocument" || code == "DimensionMismatch" || code == "InvalidOrder" ||
        code == "InvalidParameterization")
        return 3;
    return 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vanishing ideals of finite point sets over GF(p): binomial and "
                 "lattice classification, zero sets, monoid closures and torus "
                 "parameterizations"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_order = true) {
        sub->add_option("--input", opt.input, "input JSON document")->required();
        if (with_order)
            sub->add_option("--order", opt.order, "term order (grevlex|lex)")
                ->check(CLI::IsMember({"grevlex", "lex"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "binomial/lattice certificate");
    add_common(classify);
    classify->add_flag("--affine", opt.affine, "treat the input as a subset of A^s");
    classify->add_flag("--oracle", opt.oracle, "force the intersection method and cross-checks");

    CLI::App* ideal = app.add_subcommand("ideal", "reduced basis of the vanishing ideal");
    add_common(ideal);
    ideal->add_flag("--affine", opt.affine, "treat the input as a subset of A^s");
    ideal->add_flag("--oracle", opt.oracle, "force the intersection method and cross-checks");

    CLI::App* zeroset = app.add_subcommand("zeroset", "projective zero set of a graded ideal");
    add_common(zeroset);

    CLI::App* closure = app.add_subcommand("closure", "monoid closure in P^{s-1} ∪ {[0]}");
    add_common(closure, false);

    CLI::App* parameterize =
        app.add_subcommand("parameterize", "extract (H, beta, v) from a torus subgroup");
    add_common(parameterize, false);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "points of a monomial parameterization");
    add_common(enumerate, false);

    CLI::App* decompose = app.add_subcommand("decompose", "write f as a sum of binomials");
    add_common(decompose);
    decompose->add_option("--poly", opt.poly, "polynomial in the text grammar")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(opt);
        if (ideal->parsed()) return cmd_ideal(opt);
        if (zeroset->parsed()) return cmd_zeroset(opt);
        if (closure->parsed()) return cmd_closure(opt);
        if (parameterize->parsed()) return cmd_parameterize(opt);
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (decompose->parsed()) return cmd_decompose(opt);
    } catch (const bi::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
