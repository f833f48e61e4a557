#pragma once

// JSON forms of the library's data. Integers that do not fit in 64 bits are
// written as decimal strings; readers accept either form.

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "injword/chain_complex.hpp"
#include "injword/ficat.hpp"
#include "injword/liealg.hpp"
#include "injword/repth.hpp"
#include "injword/symrep.hpp"

namespace injword {

using Json = nlohmann::json;

inline Json to_json(const Integer& x) {
    if (fits_int64(x)) return Json(to_int64(x));
    return Json(x.get_str());
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not an integer: " + j.dump());
        return v;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Json to_json(const std::vector<Integer>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const IntMatrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(to_json(row));
    return a;
}

inline IntMatrix matrix_from_json(const Json& j) {
    IntMatrix m;
    for (const auto& row : j) {
        std::vector<Integer> r;
        for (const auto& x : row) r.push_back(integer_from_json(x));
        m.push_back(std::move(r));
    }
    return m;
}

// Chain complexes: {"degrees": [lo, hi], "dims": [...],
//                   "boundaries": [{"q": q, "entries": [[row, col, val], ...]}, ...]}

inline Json to_json(const IntChainComplex& c) {
    Json j;
    j["degrees"] = {c.lo(), c.hi()};
    j["dims"] = c.dims();
    Json bs = Json::array();
    for (int q = c.lo() + 1; q <= c.hi(); ++q) {
        Json entries = Json::array();
        const SparseMatrix m = c.boundary(q);
        for (const auto& t : m.entries()) entries.push_back({t.row, t.col, to_json(t.value)});
        bs.push_back({{"q", q}, {"entries", std::move(entries)}});
    }
    j["boundaries"] = std::move(bs);
    return j;
}

inline IntChainComplex complex_from_json(const Json& j) {
    const int lo = j.at("degrees").at(0).get<int>();
    const int hi = j.at("degrees").at(1).get<int>();
    auto dims = j.at("dims").get<std::vector<int>>();
    if (static_cast<int>(dims.size()) != hi - lo + 1) throw std::invalid_argument("dims do not match the degree range");
    auto dim = [&](int q) { return (q < lo || q > hi) ? 0 : dims[static_cast<std::size_t>(q - lo)]; };
    std::vector<SparseMatrix> boundaries;
    for (int q = lo + 1; q <= hi; ++q) boundaries.emplace_back(dim(q - 1), dim(q));
    for (const auto& b : j.at("boundaries")) {
        const int q = b.at("q").get<int>();
        if (q <= lo || q > hi) throw std::invalid_argument("boundary degree " + std::to_string(q) + " out of range");
        auto& m = boundaries[static_cast<std::size_t>(q - lo - 1)];
        for (const auto& e : b.at("entries")) m.add(e.at(0).get<int>(), e.at(1).get<int>(), integer_from_json(e.at(2)));
        m.canonicalize();
    }
    return IntChainComplex(lo, std::move(dims), std::move(boundaries));
}

inline Json to_json(const DegreeHomology& h) {
    return {{"degree", h.degree}, {"betti", h.betti}, {"torsion", to_json(h.torsion)}};
}

inline Json to_json(const HomologySummary& s) {
    Json a = Json::array();
    for (const auto& d : s.degrees) a.push_back(to_json(d));
    return a;
}

// Word polynomials: {"degree": d, "terms": [{"word": [...], "coeff": n}, ...]}

inline Json to_json(const WordPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [w, c] : p.terms()) terms.push_back({{"word", w}, {"coeff", to_json(c)}});
    return {{"degree", p.degree()}, {"terms", std::move(terms)}};
}

inline WordPolynomial polynomial_from_json(const Json& j) {
    WordPolynomial p(j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) p.add_term(t.at("word").get<Word>(), integer_from_json(t.at("coeff")));
    return p;
}

// Schur expansions: {"partitions": [[...], ...], "multiplicities": [...], "dimension": n}

inline Json to_json(const SchurExpansion& e) {
    Json parts = Json::array(), mult = Json::array();
    for (const auto& [p, m] : e.multiplicities) {
        parts.push_back(p.parts);
        mult.push_back(to_json(m));
    }
    return {{"n", e.n}, {"partitions", std::move(parts)}, {"multiplicities", std::move(mult)}, {"dimension", to_json(e.dimension())}};
}

inline SchurExpansion schur_from_json(const Json& j) {
    SchurExpansion e;
    e.n = j.at("n").get<int>();
    const auto& parts = j.at("partitions");
    const auto& mult = j.at("multiplicities");
    if (parts.size() != mult.size()) throw std::invalid_argument("partitions and multiplicities differ in length");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Partition p(parts[i].get<std::vector<int>>());
        if (p.size() != e.n) throw std::invalid_argument("partition " + p.to_string() + " is not of " + std::to_string(e.n));
        e.add(p, integer_from_json(mult[i]));
    }
    return e;
}

// Representations: {"degree": d, "dim": n, "generators": [matrix, ...]}

inline Json to_json(const SymmetricGroupRep& r) {
    Json gens = Json::array();
    for (const auto& g : r.generators()) gens.push_back(to_json(g));
    return {{"degree", r.degree()}, {"dim", r.dim()}, {"generators", std::move(gens)}};
}

inline SymmetricGroupRep rep_from_json(const Json& j) {
    std::vector<IntMatrix> gens;
    for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g));
    return SymmetricGroupRep(j.at("degree").get<int>(), j.at("dim").get<int>(), std::move(gens));
}

// FB data: {"entries": [{"degree": k, "dim": n} | {"degree": k, "character": [...]}
//                       | {"degree": k, "representation": {...}}, ...]}

inline Json to_json(const FBData& data) {
    Json entries = Json::array();
    for (const auto& [k, e] : data.entries()) {
        Json x{{"degree", k}, {"dim", to_json(e.dimension())}};
        if (e.character) x["character"] = to_json(e.character->values);
        if (e.matrices) x["representation"] = to_json(*e.matrices);
        entries.push_back(std::move(x));
    }
    return {{"entries", std::move(entries)}};
}

inline FBData fbdata_from_json(const Json& j) {
    FBData data;
    for (const auto& e : j.at("entries")) {
        const int k = e.at("degree").get<int>();
        if (e.contains("representation")) {
            data.set_matrices(k, rep_from_json(e.at("representation")));
        } else if (e.contains("character")) {
            CharacterVector chi;
            chi.n = k;
            for (const auto& v : e.at("character")) chi.values.push_back(integer_from_json(v));
            data.set_character(k, std::move(chi));
        } else {
            data.set_dim(k, integer_from_json(e.at("dim")));
        }
    }
    return data;
}

// Presented FI-modules: {"degrees": [rep_0, rep_1, ...], "inclusions": [matrix, ...]}

inline Json to_json(const PresentedFIModule& v) {
    Json reps = Json::array(), incl = Json::array();
    for (int k = 0; k <= v.top_degree(); ++k) {
        reps.push_back(to_json(v.symmetric_action(k)));
        if (k < v.top_degree()) incl.push_back(to_json(v.inclusion(k)));
    }
    return {{"degrees", std::move(reps)}, {"inclusions", std::move(incl)}};
}

inline PresentedFIModule fimodule_from_json(const Json& j) {
    std::vector<SymmetricGroupRep> reps;
    for (const auto& r : j.at("degrees")) reps.push_back(rep_from_json(r));
    std::vector<IntMatrix> incl;
    for (const auto& m : j.at("inclusions")) incl.push_back(matrix_from_json(m));
    return PresentedFIModule(std::move(reps), std::move(incl));
}

}  // namespace injword
