#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "injword/injword.hpp"

namespace injword::cli {
namespace {

constexpr const char* schema_id = "injword.cli/1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool pretty = false;
    bool timing = false;
    bool verify = false;
    bool json = false;  // accepted for symmetry; JSON is the default
    int limit = 9;
    int char_limit = 12;
};

/// What a leaf command produces.
struct Outcome {
    Json parameters = Json::object();
    Json result = Json::object();
    std::vector<Report> checks;
};

using Handler = std::function<Outcome()>;

struct Selected {
    std::string command;
    Handler handler;
};

// ---- argument helpers ------------------------------------------------------

void require_ground(const Globals& g, int k, const char* what = "k") {
    if (k < 0) throw UsageError(std::string(what) + " must be nonnegative");
    if (k > g.limit)
        throw LimitExceeded(std::string(what) + " = " + std::to_string(k) + " exceeds the ground-set limit " +
                            std::to_string(g.limit) + " (raise it with --limit)");
}

void require_character_degree(const Globals& g, int n) {
    if (n < 0) throw UsageError("degree must be nonnegative");
    if (n > g.char_limit)
        throw LimitExceeded("character degree " + std::to_string(n) + " exceeds the limit " + std::to_string(g.char_limit) +
                            " (raise it with --char-limit)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("cannot read " + what + " from '" + s + "'");
    }
}

Degree parse_degree(const std::string& s) {
    if (s == "inf" || s == "infinity") return Degree::infinity();
    const int v = parse_int(s, "degree bound");
    if (v < 0) throw UsageError("degree bounds are nonnegative");
    return Degree(v);
}

Json degree_json(const Degree& d) { return d.is_infinite() ? Json("inf") : Json(d.value()); }

Json pair_json(const DegreePair& p) { return {{"gen", degree_json(p.gen)}, {"rel", degree_json(p.rel)}}; }

DegreePair parse_pair(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw UsageError("expected D,R but got '" + s + "'");
    return DegreePair{parse_degree(parts[0]), parse_degree(parts[1])};
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    for (const auto& t : split(s, ',')) parts.push_back(parse_int(t, "partition part"));
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

SymmetricGroupRep named_rep(const std::string& name, int d) {
    if (name == "trivial") return SymmetricGroupRep::trivial(d);
    if (name == "sign") return SymmetricGroupRep::sign(d);
    if (name == "regular") return SymmetricGroupRep::regular(d);
    throw UsageError("unknown representation '" + name + "' (trivial, sign, regular)");
}

/// "m:i1,i2,...:a-b,c-d[:-]" -> a morphism [#images] -> [m].
FIMPlusMorphism parse_morphism(const std::string& s) {
    auto fields = split(s, ':');
    if (fields.size() < 2 || fields.size() > 4) throw UsageError("morphism spec is TARGET:IMAGES:BLOCKS[:SIGN], got '" + s + "'");
    const int target = parse_int(fields[0], "target size");
    std::vector<Label> images;
    if (!fields[1].empty())
        for (const auto& t : split(fields[1], ',')) images.push_back(parse_int(t, "image"));
    std::vector<Block> blocks;
    if (fields.size() > 2 && !fields[2].empty())
        for (const auto& t : split(fields[2], ',')) {
            auto ab = split(t, '-');
            if (ab.size() != 2) throw UsageError("block must be a-b, got '" + t + "'");
            blocks.emplace_back(parse_int(ab[0], "block"), parse_int(ab[1], "block"));
        }
    int sign = 1;
    if (fields.size() == 4) {
        if (fields[3] == "-" || fields[3] == "-1") sign = -1;
        else if (fields[3] != "+" && fields[3] != "1" && fields[3] != "+1") throw UsageError("sign must be + or -");
    }
    try {
        return FIMPlusMorphism(target, std::move(images), std::move(blocks), sign);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Json morphism_json(const FIMPlusMorphism& f) {
    Json blocks = Json::array();
    for (const auto& b : f.blocks()) blocks.push_back({b.first, b.second});
    return {{"source", f.source()}, {"target", f.target()}, {"images", f.images()}, {"blocks", std::move(blocks)},
            {"sign", f.sign()}, {"text", f.to_string()}};
}

/// "2=5,3=2" -> dimension data.
FBData parse_dims(const std::string& s) {
    std::map<int, Integer> d;
    for (const auto& t : split(s, ',')) {
        auto kv = split(t, '=');
        if (kv.size() != 2) throw UsageError("generator data is DEGREE=DIM,..., got '" + t + "'");
        d[parse_int(kv[0], "degree")] = parse_int(kv[1], "dimension");
    }
    return FBData::dims(d);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Json report_json(const Report& r) {
    Json facts = Json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    return {{"name", r.name}, {"passed", r.passed}, {"failures", r.failures}, {"facts", std::move(facts)}};
}

Json homology_by_degree(const HomologySummary& h) { return to_json(h); }

// ---- human-readable output -------------------------------------------------

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        if (j.empty()) rows.emplace_back(prefix, "{}");
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void print_pretty(const Json& doc, std::ostream& out) {
    out << doc.at("command").get<std::string>() << "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc.at("parameters"), "", rows);
    flatten(doc.at("result"), "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) out << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

// ---- command registration --------------------------------------------------

class Registry {
public:
    Registry(CLI::App& app, Globals& g) : app_(app), g_(g) {}

    CLI::App* group(const std::string& name, const std::string& help) {
        auto* sub = app_.add_subcommand(name, help);
        sub->require_subcommand(1);
        return sub;
    }

    /// A leaf whose handler is built once options are parsed.
    template <class Setup>
    void leaf(CLI::App* parent, const std::string& name, const std::string& help, Setup setup) {
        auto* sub = parent->add_subcommand(name, help);
        const std::string command = parent->get_name() + " " + name;
        Handler h = setup(sub);
        sub->callback([this, command, h] { selected_ = Selected{command, h}; });
    }

    Globals& globals() { return g_; }
    const std::optional<Selected>& selected() const { return selected_; }

private:
    CLI::App& app_;
    Globals& g_;
    std::optional<Selected> selected_;
};

void register_inj(Registry& reg, CLI::App* inj) {
    Globals& g = reg.globals();

    reg.leaf(inj, "homology", "integral homology of the complex of injective words", [&g](CLI::App* sub) {
        auto k = std::make_shared<int>(0);
        auto oriented = std::make_shared<bool>(false);
        sub->add_option("--k", *k, "size of the ground set")->required();
        sub->add_flag("--oriented", *oriented, "use the oriented complex Inj+");
        return Handler([&g, k, oriented] {
            require_ground(g, *k);
            Outcome o;
            o.parameters = {{"k", *k}, {"oriented", *oriented}};
            const auto s = GroundSet::standard(*k);
            const auto c = *oriented ? inj_plus_complex(s) : inj_complex(s);
            const auto h = homology(c);
            const auto top = h.at(*k - 1);
            o.result = {{"degree", *k - 1}, {"betti", top.betti}, {"torsion", to_json(top.torsion)},
                        {"by_degree", homology_by_degree(h)}, {"dims", c.dims()}};
            if (g.verify) {
                Report r("homology of Inj([" + std::to_string(*k) + "])");
                r.check(h.concentrated_in(*k - 1), "homology outside the top degree");
                r.check(Integer(top.betti) == derangements(*k), "top betti differs from the derangement number");
                r.check(h.torsion_free(), "torsion present");
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });

    reg.leaf(inj, "basis", "PBW or L-product basis in degree k", [&g](CLI::App* sub) {
        auto k = std::make_shared<int>(0);
        auto kind = std::make_shared<std::string>("lproduct");
        sub->add_option("--k", *k, "number of letters")->required();
        sub->add_option("--kind", *kind, "lproduct (top homology) or pbw (all chains)")
            ->check(CLI::IsMember({"lproduct", "pbw"}));
        return Handler([&g, k, kind] {
            require_ground(g, *k);
            Outcome o;
            o.parameters = {{"k", *k}, {"kind", *kind}};
            const auto basis = *kind == "pbw" ? pbw_basis(*k) : lproduct_basis(*k);
            Json elems = Json::array();
            for (const auto& p : basis) elems.push_back(p.to_string());
            o.result = {{"count", basis.size()}, {"elements", std::move(elems)}};
            if (g.verify) {
                if (*kind == "pbw") {
                    Report r("PBW basis, k=" + std::to_string(*k));
                    r.check(Integer(static_cast<unsigned long>(basis.size())) == factorial(static_cast<unsigned>(*k)), "count differs from k!");
                    std::vector<WordPolynomial> polys;
                    for (const auto& p : basis) polys.push_back(p.expand());
                    const auto m = expansion_matrix(polys, enumerate_injections(*k - 1, GroundSet::standard(*k)));
                    r.check(smith_form(m).unimodular(), "expansion matrix is not unimodular");
                    o.checks.push_back(std::move(r));
                } else {
                    o.checks.push_back(verify_top_homology(*k));
                }
            }
            return o;
        });
    });

    reg.leaf(inj, "verify", "top-homology basis and the chain isomorphism with Inj+", [&g](CLI::App* sub) {
        auto k = std::make_shared<int>(0);
        sub->add_option("--k", *k, "number of letters")->required();
        return Handler([&g, k] {
            require_ground(g, *k);
            Outcome o;
            o.parameters = {{"k", *k}};
            const auto s = GroundSet::standard(*k);
            o.checks.push_back(verify_top_homology(*k));
            Report r("chain isomorphism Inj -> Inj+, k=" + std::to_string(*k));
            const auto phi = phi_isomorphism(s);
            r.check(is_chain_map(phi, inj_complex(s), inj_plus_complex(s)), "not a chain map");
            r.check(is_signed_bijection(phi), "not a signed bijection");
            o.checks.push_back(std::move(r));
            bool all = true;
            for (const auto& c : o.checks) all = all && c.passed;
            o.result = {{"passed", all}};
            return o;
        });
    });
}

void register_twisted(Registry& reg, CLI::App* tw) {
    Globals& g = reg.globals();
    reg.leaf(tw, "homology", "homology of Inj(M(d)) or Inj(M(W)) on [k]", [&g](CLI::App* sub) {
        auto d = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto rep = std::make_shared<std::string>("");
        sub->add_option("--d", *d, "generator degree")->required();
        sub->add_option("--k", *k, "size of the ground set")->required();
        sub->add_option("--rep", *rep, "W as trivial, sign or regular; omit for M(d) itself");
        return Handler([&g, d, k, rep] {
            require_ground(g, *k);
            if (*d < 0) throw UsageError("d must be nonnegative");
            Outcome o;
            o.parameters = {{"d", *d}, {"k", *k}, {"rep", rep->empty() ? "none" : *rep}};
            const auto s = GroundSet::standard(*k);
            const int top = *k - 1 - *d;
            std::optional<SymmetricGroupRep> w;
            if (!rep->empty()) w = named_rep(*rep, *d);
            const auto c = w ? twisted_inj_complex(*w, s) : inj_d_complex(*d, s);
            const auto h = homology(c);
            o.result = {{"degree", top}, {"betti", h.at(top).betti}, {"torsion", to_json(h.at(top).torsion)},
                        {"by_degree", homology_by_degree(h)}, {"dims", c.dims()}};
            if (!w && *d <= *k) o.result["expected_betti"] = to_json(falling_factorial(*k, *d) * derangements(*k - *d));
            if (g.verify) {
                if (w) {
                    o.checks.push_back(verify_connectedMW(*w, s));
                    if (*rep == "regular") {
                        Report r("twisted complex of the regular representation vs Inj(M(d))");
                        r.check(h.same_as(homology(inj_d_complex(*d, s))), "homology differs");
                        o.checks.push_back(std::move(r));
                    }
                } else {
                    Report r("Inj(M(" + std::to_string(*d) + "))_[" + std::to_string(*k) + "]");
                    r.check(h.concentrated_in(top), "homology not concentrated in degree " + std::to_string(top));
                    if (*d <= *k)
                        r.check(Integer(h.at(top).betti) == falling_factorial(*k, *d) * derangements(*k - *d), "rank differs");
                    o.checks.push_back(std::move(r));
                }
            }
            return o;
        });
    });
}

void register_inj2(Registry& reg, CLI::App* inj2) {
    Globals& g = reg.globals();
    auto common = [](CLI::App* sub, std::shared_ptr<int> d, std::shared_ptr<int> k) {
        sub->add_option("--d", *d, "generator degree")->required();
        sub->add_option("--k", *k, "size of the ground set")->required();
    };
    reg.leaf(inj2, "homology", "homology of Inj^2(M^{FIM+}(d)) on [k]", [&g, common](CLI::App* sub) {
        auto d = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        common(sub, d, k);
        return Handler([&g, d, k] {
            require_ground(g, *k);
            Outcome o;
            o.parameters = {{"d", *d}, {"k", *k}};
            const auto h = homology(inj2_complex(*d, GroundSet::standard(*k)));
            // Vanishing is predicted for 2i <= k - d - 4.
            const int num = *k - *d - 4;
            const int vanish = num >= 0 ? num / 2 : -((1 - num) / 2);
            o.result = {{"by_degree", homology_by_degree(h)}, {"vanishing_through", vanish},
                        {"vanishes", h.vanishes_through(vanish)}};
            if (g.verify) {
                Report r("vanishing range of Inj^2");
                r.check(h.vanishes_through(vanish), "homology in degree <= " + std::to_string(vanish));
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });
    reg.leaf(inj2, "verify", "structure of Inj^2(M^{FIM+}(d)) and the coequalizer condition", [&g, common](CLI::App* sub) {
        auto d = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        common(sub, d, k);
        return Handler([&g, d, k] {
            require_ground(g, *k);
            Outcome o;
            o.parameters = {{"d", *d}, {"k", *k}};
            o.checks.push_back(verify_structure_inj2(*d, GroundSet::standard(*k)));
            o.result = {{"passed", o.checks.back().passed}, {"coequalizer", coequalizer_check(*d, *k)}};
            return o;
        });
    });
}

void register_fim(Registry& reg, CLI::App* fim) {
    Globals& g = reg.globals();
    reg.leaf(fim, "dim", "dimension of M^{FIM+}(d)_k", [&g](CLI::App* sub) {
        auto d = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        sub->add_option("--d", *d, "generator degree")->required();
        sub->add_option("--k", *k, "degree")->required();
        return Handler([&g, d, k] {
            Outcome o;
            o.parameters = {{"d", *d}, {"k", *k}};
            o.result = {{"dim", to_json(free_fimplus_dim(*d, *k))}};
            if (g.verify) {
                require_ground(g, *k);
                Report r("free FIM+ dimension by enumeration");
                const auto n = fimplus_free_basis(*d, GroundSet::standard(*k)).size();
                r.check(Integer(static_cast<unsigned long>(n)) == free_fimplus_dim(*d, *k), "enumeration gives " + std::to_string(n));
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });

    reg.leaf(fim, "decompose", "irreducible decomposition of M^{FIM+}(W)_k", [&g](CLI::App* sub) {
        auto d = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto w = std::make_shared<std::string>("");
        sub->add_option("--d", *d, "generator degree")->required();
        sub->add_option("--k", *k, "degree")->required();
        sub->add_option("--rep", *w, "W as a partition of d, e.g. 2,1 (default: trivial)");
        return Handler([&g, d, k, w] {
            if (*d < 0) throw UsageError("d must be nonnegative");
            require_character_degree(g, *k);
            Outcome o;
            Partition lambda = w->empty() ? (*d == 0 ? Partition() : Partition({*d})) : parse_partition(*w);
            if (lambda.size() != *d) throw UsageError("W must be a partition of d");
            o.parameters = {{"d", *d}, {"k", *k}, {"rep", lambda.parts}};
            const auto e = decompose_free_fimplus(irreducible(lambda), *k);
            o.result = to_json(e);
            if (g.verify) {
                Report r("decomposition dimension");
                const Integer expect = free_fimplus_dim(*d, *k) / factorial(static_cast<unsigned>(*d)) * mn_character(lambda).degree();
                r.check(e.dimension() == expect, "dimension " + e.dimension().get_str() + " vs " + expect.get_str());
                o.checks.push_back(std::move(r));
                if (*d == 0 && *k % 2 == 0) o.checks.push_back(verify_m0_decomposition(*k));
            }
            return o;
        });
    });

    reg.leaf(fim, "compose", "compose FIM+ morphisms, G after F", [&g](CLI::App* sub) {
        auto f = std::make_shared<std::string>();
        auto gg = std::make_shared<std::string>();
        sub->add_option("--f", *f, "first morphism TARGET:IMAGES:BLOCKS[:SIGN], e.g. 4:2,1:3-4")->required();
        sub->add_option("--g", *gg, "second morphism, applied after F")->required();
        return Handler([&g, f, gg] {
            Outcome o;
            o.parameters = {{"f", *f}, {"g", *gg}};
            const auto F = parse_morphism(*f);
            const auto G = parse_morphism(*gg);
            if (F.target() != G.source())
                throw UsageError("F lands in [" + std::to_string(F.target()) + "] but G starts at [" + std::to_string(G.source()) + "]");
            const auto H = fimplus_compose(G, F);
            o.result = {{"composite", morphism_json(H)}};
            if (g.verify) {
                Report r("unit laws");
                r.check(fimplus_compose(G, FIMPlusMorphism::identity(G.source())) == G, "G o id != G");
                r.check(fimplus_compose(FIMPlusMorphism::identity(H.target()), H) == H, "id o H != H");
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });
}

PresentedFIModule module_from_options(const std::string& file, const std::string& free_rep, int d, int top, long scale) {
    if (!file.empty()) return fimodule_from_json(read_json_file(file));
    if (!free_rep.empty()) return PresentedFIModule::free_module(named_rep(free_rep, d), top);
    return PresentedFIModule::constant(top, scale);
}

void register_fi(Registry& reg, CLI::App* fi) {
    Globals& g = reg.globals();
    reg.leaf(fi, "h0", "FI-homology H_0 of a presented FI-module", [&g](CLI::App* sub) {
        auto file = std::make_shared<std::string>();
        auto free_rep = std::make_shared<std::string>();
        auto d = std::make_shared<int>(0);
        auto top = std::make_shared<int>(4);
        auto scale = std::make_shared<long>(1);
        sub->add_option("--module", *file, "PresentedFIModule JSON file");
        sub->add_option("--free", *free_rep, "use M(W) for W trivial, sign or regular of degree --d");
        sub->add_option("--d", *d, "degree of W for --free");
        sub->add_option("--top", *top, "top presented degree for --free or the constant module");
        sub->add_option("--scale", *scale, "constant module with inclusions multiplied by SCALE (default module)");
        return Handler([&g, file, free_rep, d, top, scale] {
            if (file->empty()) require_ground(g, *top, "top");
            Outcome o;
            const auto v = module_from_options(*file, *free_rep, *d, *top, *scale);
            require_ground(g, v.top_degree(), "top");
            o.parameters = {{"module", file->empty() ? (free_rep->empty() ? "constant" : "free") : *file},
                            {"top", v.top_degree()}};
            if (!free_rep->empty()) o.parameters["free"] = *free_rep, o.parameters["d"] = *d;
            if (file->empty() && free_rep->empty()) o.parameters["scale"] = *scale;
            Json rows = Json::array();
            Report r("H_0 against H_-1 of Inj(V)");
            for (int k = 0; k <= v.top_degree(); ++k) {
                const auto h = h0_fi(v, k);
                rows.push_back(to_json(h));
                if (g.verify && k >= 1) {
                    const auto via_complex = homology(inj_complex_of_module(v, k)).at(-1);
                    r.check(via_complex.betti == h.betti && via_complex.torsion == h.torsion, "mismatch at k=" + std::to_string(k));
                }
            }
            o.result = {{"by_degree", std::move(rows)}};
            if (g.verify) o.checks.push_back(std::move(r));
            return o;
        });
    });

    reg.leaf(fi, "e2", "dimensions on the E^2 page from generator data", [&g](CLI::App* sub) {
        auto gens = std::make_shared<std::vector<std::string>>();
        auto k = std::make_shared<int>(0);
        sub->add_option("--gen", *gens, "Q:DEGREE=DIM,... generator data of the q-th module; repeatable")->required();
        sub->add_option("--k", *k, "degree")->required();
        return Handler([&g, gens, k] {
            (void)g;
            Outcome o;
            std::map<int, FBData> by_q;
            for (const auto& spec : *gens) {
                const auto pos = spec.find(':');
                if (pos == std::string::npos) throw UsageError("--gen wants Q:DEGREE=DIM,..., got '" + spec + "'");
                by_q[parse_int(spec.substr(0, pos), "q")] = parse_dims(spec.substr(pos + 1));
            }
            o.parameters = {{"gen", *gens}, {"k", *k}};
            Json table = Json::array();
            for (const auto& [pq, v] : e2_page_dims(by_q, *k)) table.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", to_json(v)}});
            o.result = {{"entries", std::move(table)}};
            return o;
        });
    });

    reg.leaf(fi, "freedim", "dimensions of a free FI-module from generator dimensions", [&g](CLI::App* sub) {
        auto gens = std::make_shared<std::string>();
        auto kmax = std::make_shared<int>(10);
        sub->add_option("--gens", *gens, "DEGREE=DIM,..., e.g. 2=5,3=2")->required();
        sub->add_option("--kmax", *kmax, "largest degree to list");
        return Handler([&g, gens, kmax] {
            (void)g;
            if (*kmax < 0) throw UsageError("kmax must be nonnegative");
            Outcome o;
            const auto data = parse_dims(*gens);
            o.parameters = {{"gens", *gens}, {"kmax", *kmax}};
            Json dims = Json::array();
            for (int k = 0; k <= *kmax; ++k) dims.push_back(to_json(free_fi_dim(data, k)));
            o.result = {{"dims", std::move(dims)}};
            if (g.verify) {
                if (*kmax > 20) throw LimitExceeded("subset enumeration is capped at kmax = 20");
                Report r("free FI dimensions by subset enumeration");
                for (int k = 0; k <= *kmax; ++k) {
                    Integer count = 0;
                    for (unsigned long mask = 0; mask < (1UL << k); ++mask) count += data.dim(__builtin_popcountl(mask));
                    r.check(count == free_fi_dim(data, k), "mismatch at k=" + std::to_string(k));
                }
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });
}

void register_conf(Registry& reg, CLI::App* conf) {
    Globals& g = reg.globals();
    reg.leaf(conf, "dim", "Betti numbers of F_k(R^n)", [&g](CLI::App* sub) {
        auto n = std::make_shared<int>(2);
        auto k = std::make_shared<int>(0);
        auto i = std::make_shared<int>(-1);
        sub->add_option("--n", *n, "ambient dimension")->required();
        sub->add_option("--k", *k, "number of points")->required();
        sub->add_option("--i", *i, "homological degree (default: all)");
        return Handler([&g, n, k, i] {
            if (*n < 2) throw UsageError("n must be at least 2");
            if (*k < 0) throw UsageError("k must be nonnegative");
            Outcome o;
            o.parameters = {{"n", *n}, {"k", *k}};
            const int maxdeg = (*n - 1) * std::max(*k - 1, 0);
            std::vector<Integer> poly;
            for (int q = 0; q <= maxdeg; ++q) poly.push_back(config_betti(*n, *k, q));
            if (*i >= 0) {
                o.parameters["i"] = *i;
                o.result = {{"betti", to_json(config_betti(*n, *k, *i))}};
            } else {
                o.result = {{"betti", to_json(poly)}};
            }
            if (g.verify) {
                require_ground(g, *k);
                Report r("Betti numbers of F_k(R^n)");
                std::vector<Integer> oracle{1};
                for (int j = 1; j < *k; ++j) {
                    std::vector<Integer> next(oracle.size() + static_cast<std::size_t>(*n - 1), 0);
                    for (std::size_t t = 0; t < oracle.size(); ++t) {
                        next[t] += oracle[t];
                        next[t + static_cast<std::size_t>(*n - 1)] += j * oracle[t];
                    }
                    oracle = std::move(next);
                }
                oracle.resize(poly.size(), 0);
                r.check(oracle == poly, "Poincare polynomial differs from prod (1 + j t^(n-1))");
                for (int q = 0; q <= maxdeg; ++q)
                    r.check(cohen_count_by_partitions(*n, *k, q, 1) == poly[static_cast<std::size_t>(q)],
                            "set-partition enumeration differs in degree " + std::to_string(q));
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });

    reg.leaf(conf, "w", "dimension of the FI-generators W_i at k", [&g](CLI::App* sub) {
        auto n = std::make_shared<int>(2);
        auto i = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        sub->add_option("--n", *n, "ambient dimension")->required();
        sub->add_option("--i", *i, "grading index")->required();
        sub->add_option("--k", *k, "number of points")->required();
        return Handler([&g, n, i, k] {
            if (*n < 2) throw UsageError("n must be at least 2");
            Outcome o;
            o.parameters = {{"n", *n}, {"i", *i}, {"k", *k}};
            const Integer v = w_module_dim(*n, *i, *k);
            o.result = {{"dim", to_json(v)}};
            const long twice = static_cast<long>(*n - 1) * *k + *i;
            if (twice >= 0 && twice % 2 == 0) o.result["homological_degree"] = twice / 2;
            if (g.verify) {
                require_ground(g, *k);
                Report r("W_i by set-partition enumeration");
                const Integer slow = (twice >= 0 && twice % 2 == 0) ? cohen_count_by_partitions(*n, *k, static_cast<int>(twice / 2), 2) : Integer(0);
                r.check(slow == v, "enumeration gives " + slow.get_str());
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });

    reg.leaf(conf, "secondary", "secondary generators of the W[d] grading", [&g](CLI::App* sub) {
        auto n = std::make_shared<int>(2);
        auto d = std::make_shared<int>(1);
        auto i = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        sub->add_option("--n", *n, "ambient dimension")->required();
        sub->add_option("--d", *d, "stabilization depth")->required();
        sub->add_option("--i", *i, "grading index")->required();
        sub->add_option("--k", *k, "number of points")->required();
        return Handler([&g, n, d, i, k] {
            if (*n < 2) throw UsageError("n must be at least 2");
            if (*d < 1) throw UsageError("d must be at least 1");
            Outcome o;
            o.parameters = {{"n", *n}, {"d", *d}, {"i", *i}, {"k", *k}};
            const Integer v = count_secondary_generators(*n, *d, *i, *k);
            Rational bound(static_cast<long>(*i) * (*d * *d + *d), *n - 1);
            bound.canonicalize();
            o.result = {{"count", to_json(v)}, {"vanishing_bound", to_string(bound)}, {"beyond_bound", Rational(*k) > bound}};
            if (g.verify) {
                require_ground(g, *k);
                Report r("secondary generators by set-partition enumeration");
                const long num = static_cast<long>(*n - 1) * (*d - 1) * *k + *i;
                const Integer slow = (num >= 0 && num % *d == 0) ? cohen_count_by_partitions(*n, *k, static_cast<int>(num / *d), *d + 1) : Integer(0);
                r.check(slow == v, "enumeration gives " + slow.get_str());
                if (Rational(*k) > bound) r.check(v == 0, "nonzero beyond the vanishing bound");
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });
}

Json root_two_json(const RootTwo& x) {
    return {{"exact", x.to_string()}, {"a", to_json(x.rational_part())}, {"b", to_json(x.root_part())}, {"decimal", x.to_decimal()}};
}

void register_bounds(Registry& reg, CLI::App* bounds) {
    Globals& g = reg.globals();
    reg.leaf(bounds, "closed-manifold", "stable-range bounds for closed manifolds", [&g](CLI::App* sub) {
        auto p = std::make_shared<int>(0);
        sub->add_option("--p", *p, "homological degree")->required();
        return Handler([&g, p] {
            if (*p < 0) throw UsageError("p must be nonnegative");
            Outcome o;
            o.parameters = {{"p", *p}};
            const auto b = closed_manifold_bounds(*p);
            o.result = {{"gen", b.gen.to_string()},
                        {"rel", b.rel.to_string()},
                        {"gen_detail", root_two_json(b.gen)},
                        {"rel_detail", root_two_json(b.rel)},
                        {"page", {{"r", *p + 1}, {"gen", degree_json(b.page.gen)}, {"rel", degree_json(b.page.rel)}}}};
            if (g.verify) {
                Report r("bound vector dominance");
                r.check(b.page_within_closed_form, "page bound exceeds the closed form");
                for (int rr = 2; rr <= 20; ++rr)
                    r.check(dominated_by(iterate_bound_matrix(e2_start(), rr - 1), silver_bound_vector(rr)), "r=" + std::to_string(rr));
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });

    reg.leaf(bounds, "homfi", "generation and relation degree of ker/im", [&g](CLI::App* sub) {
        auto v = std::make_shared<std::array<std::string, 6>>();
        for (auto& s : *v) s = "0";
        const char* names[6] = {"--du", "--ru", "--dv", "--rv", "--dw", "--rw"};
        for (std::size_t i = 0; i < 6; ++i) sub->add_option(names[i], (*v)[i], "degree bound or inf");
        return Handler([&g, v] {
            (void)g;
            Outcome o;
            const char* keys[6] = {"du", "ru", "dv", "rv", "dw", "rw"};
            std::array<Degree, 6> x;
            for (std::size_t i = 0; i < 6; ++i) {
                x[i] = parse_degree((*v)[i]);
                o.parameters[keys[i]] = degree_json(x[i]);
            }
            o.result = pair_json(homfi_bounds(x[0], x[1], x[2], x[3], x[4], x[5]));
            return o;
        });
    });

    reg.leaf(bounds, "ss", "spectral sequence page bounds", [&g](CLI::App* sub) {
        auto grading = std::make_shared<std::string>("cohomological");
        auto in = std::make_shared<std::string>("0,0");
        auto cell = std::make_shared<std::string>("0,0");
        auto outp = std::make_shared<std::string>("0,0");
        auto p = std::make_shared<int>(-1);
        auto q = std::make_shared<int>(0);
        auto sharper = std::make_shared<bool>(false);
        auto steps = std::make_shared<int>(-1);
        sub->add_option("--grading", *grading, "homological or cohomological")->check(CLI::IsMember({"homological", "cohomological"}));
        sub->add_option("--in", *in, "D,R of the cell mapping in");
        sub->add_option("--cell", *cell, "D,R of the cell itself");
        sub->add_option("--out", *outp, "D,R of the cell receiving the differential");
        sub->add_option("--p", *p, "E^2 bounds at (p,q) of the puncture resolution sequence");
        sub->add_option("--q", *q, "second index for --p");
        sub->add_flag("--sharper", *sharper, "start from D = 2p instead of 2(p+q)");
        sub->add_option("--steps", *steps, "iterate the bound matrix from (4,3,6,4)");
        return Handler([&g, grading, in, cell, outp, p, q, sharper, steps] {
            (void)g;
            Outcome o;
            if (*steps >= 0) {
                o.parameters = {{"steps", *steps}};
                const auto v = iterate_bound_matrix(e2_start(), *steps);
                o.result = {{"vector", {to_json(v.a), to_json(v.b), to_json(v.c), to_json(v.d)}}};
                Json w = Json::array();
                for (const auto& x : silver_bound_vector(*steps + 1)) w.push_back(root_two_json(x));
                o.result["silver_vector"] = std::move(w);
                o.result["dominated"] = dominated_by(v, silver_bound_vector(*steps + 1));
            } else if (*p >= 0) {
                if (*q < 0) throw UsageError("q must be nonnegative");
                o.parameters = {{"p", *p}, {"q", *q}, {"sharper", *sharper}};
                o.result = {{"e1", pair_json(e1_bounds(*p, *q, *sharper))}, {"e2", pair_json(e2_bounds(*p, *q, *sharper))}};
            } else {
                o.parameters = {{"grading", *grading}, {"in", *in}, {"cell", *cell}, {"out", *outp}};
                const Grading gr = *grading == "homological" ? Grading::homological : Grading::cohomological;
                o.result = pair_json(ss_bounds(gr, parse_pair(*in), parse_pair(*cell), parse_pair(*outp)));
            }
            return o;
        });
    });
}

void register_seq(Registry& reg, CLI::App* seq) {
    Globals& g = reg.globals();
    reg.leaf(seq, "derangements", "derangement numbers h_0..h_n", [&g](CLI::App* sub) {
        auto n = std::make_shared<int>(10);
        sub->add_option("--n", *n, "last index");
        return Handler([&g, n] {
            if (*n < 0) throw UsageError("n must be nonnegative");
            Outcome o;
            o.parameters = {{"n", *n}};
            std::vector<Integer> h;
            for (int k = 0; k <= *n; ++k) h.push_back(derangements(k));
            o.result = {{"values", to_json(h)}};
            if (g.verify) {
                Report r("derangements by the alternating sum");
                for (int k = 0; k <= *n; ++k) {
                    Integer alt = 0;
                    for (int j = 0; j <= k; ++j) alt += (j % 2 ? -1 : 1) * factorial(static_cast<unsigned>(k)) / factorial(static_cast<unsigned>(j));
                    r.check(alt == h[static_cast<std::size_t>(k)], "k=" + std::to_string(k));
                }
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });
    reg.leaf(seq, "lie-ranks", "ranks of the multilinear free Lie superalgebra", [&g](CLI::App* sub) {
        auto n = std::make_shared<int>(10);
        sub->add_option("--n", *n, "last index");
        return Handler([&g, n] {
            if (*n < 0) throw UsageError("n must be nonnegative");
            Outcome o;
            o.parameters = {{"n", *n}};
            std::vector<Integer> l;
            for (int k = 0; k <= *n; ++k) l.push_back(lie_rank(k));
            o.result = {{"values", to_json(l)}};
            if (g.verify) {
                Report r("Lie ranks against the Reutenauer basis");
                for (int k = 2; k <= std::min(*n, g.limit); ++k)
                    r.check(Integer(static_cast<unsigned long>(reutenauer_basis(GroundSet::standard(k)).size())) == l[static_cast<std::size_t>(k)], "k=" + std::to_string(k));
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });
    reg.leaf(seq, "egf-check", "exp of the Lie series against the derangement series", [&g](CLI::App* sub) {
        auto order = std::make_shared<int>(12);
        sub->add_option("--order", *order, "truncation order");
        return Handler([&g, order] {
            (void)g;
            if (*order < 0) throw UsageError("order must be nonnegative");
            Outcome o;
            o.parameters = {{"order", *order}};
            const auto lhs = egf_exp(lie_series(*order));
            const auto rhs = derangement_series(*order);
            Json values = Json::array();
            for (const auto& v : lhs.egf_values()) values.push_back(to_string(v));
            o.result = {{"equal", lhs == rhs}, {"exp_values", std::move(values)}};
            Report r("exp(L) = H");
            r.check(lhs == rhs, "series differ");
            o.checks.push_back(std::move(r));
            return o;
        });
    });
}

void register_export(Registry& reg, CLI::App* ex) {
    Globals& g = reg.globals();
    reg.leaf(ex, "complex", "write a chain complex as JSON", [&g](CLI::App* sub) {
        auto kind = std::make_shared<std::string>("inj");
        auto k = std::make_shared<int>(0);
        auto d = std::make_shared<int>(0);
        auto rep = std::make_shared<std::string>("trivial");
        sub->add_option("--kind", *kind, "inj, inj-plus, inj-d, twisted or inj2")
            ->check(CLI::IsMember({"inj", "inj-plus", "inj-d", "twisted", "inj2"}));
        sub->add_option("--k", *k, "size of the ground set")->required();
        sub->add_option("--d", *d, "generator degree for inj-d, twisted, inj2");
        sub->add_option("--rep", *rep, "W for twisted: trivial, sign or regular");
        return Handler([&g, kind, k, d, rep] {
            require_ground(g, *k);
            Outcome o;
            o.parameters = {{"kind", *kind}, {"k", *k}};
            const auto s = GroundSet::standard(*k);
            IntChainComplex c;
            if (*kind == "inj") c = inj_complex(s);
            else if (*kind == "inj-plus") c = inj_plus_complex(s);
            else {
                o.parameters["d"] = *d;
                if (*kind == "inj-d") c = inj_d_complex(*d, s);
                else if (*kind == "inj2") c = inj2_complex(*d, s);
                else {
                    o.parameters["rep"] = *rep;
                    c = twisted_inj_complex(named_rep(*rep, *d), s);
                }
            }
            o.result = to_json(c);
            if (g.verify) {
                Report r("export round trip");
                const auto back = complex_from_json(o.result);
                r.check(back.dims() == c.dims() && back.boundaries() == c.boundaries(), "re-imported complex differs");
                o.checks.push_back(std::move(r));
            }
            return o;
        });
    });
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"Injective words, FIM+ modules and configuration-space calculators", "injword"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--pretty", g.pretty, "human-readable table instead of JSON");
    app.add_flag("--json", g.json, "JSON output (the default)");
    app.add_flag("--timing", g.timing, "report elapsed time on standard error");
    app.add_flag("--verify", g.verify, "run oracle cross-checks; exit 3 on mismatch");
    app.add_option("--limit", g.limit, "largest ground set (default 9)");
    app.add_option("--char-limit", g.char_limit, "largest symmetric-group degree for characters (default 12)");
    app.set_version_flag("--version", version);

    Registry reg(app, g);
    register_inj(reg, reg.group("inj", "complexes of injective words"));
    register_twisted(reg, reg.group("twisted", "twisted complexes Inj(M(W))"));
    register_inj2(reg, reg.group("inj2", "secondary complexes Inj^2"));
    register_fim(reg, reg.group("fim", "the category FIM+ and its free modules"));
    register_fi(reg, reg.group("fi", "presented and free FI-modules"));
    register_conf(reg, reg.group("conf", "configuration spaces of R^n"));
    register_bounds(reg, reg.group("bounds", "generation and relation degree bounds"));
    register_seq(reg, reg.group("seq", "integer sequences"));
    register_export(reg, reg.group("export", "export data as JSON"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion&) {
        out << version << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        print_error(err, "usage", e.what());
        return usage_error;
    }
    if (!reg.selected()) {
        print_error(err, "usage", "no command given");
        return usage_error;
    }
    const auto& chosen = *reg.selected();
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = chosen.handler();
    } catch (const UsageError& e) {
        print_error(err, "usage", e.what());
        return usage_error;
    } catch (const LimitExceeded& e) {
        print_error(err, "limit", e.what());
        return limit_exceeded;
    } catch (const std::invalid_argument& e) {
        print_error(err, "input", e.what());
        return usage_error;
    } catch (const std::domain_error& e) {
        print_error(err, "input", e.what());
        return usage_error;
    } catch (const std::exception& e) {
        print_error(err, "internal", e.what());
        return internal_error;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool passed = true;
    if (!o.checks.empty()) {
        Json checks = Json::array();
        for (const auto& c : o.checks) {
            checks.push_back(report_json(c));
            passed = passed && c.passed;
        }
        o.result["verification"] = std::move(checks);
    }
    const Json doc{{"schema", schema_id}, {"command", chosen.command}, {"parameters", o.parameters},
                   {"result", o.result}, {"version", version}};
    if (g.pretty)
        print_pretty(doc, out);
    else
        out << doc.dump() << "\n";
    if (g.timing) err << "time: " << seconds << " s\n";
    if (!passed) {
        std::string failed;
        for (const auto& c : o.checks)
            if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
        print_error(err, "verification", "failed: " + failed);
        return verification_failed;
    }
    return ok;
}

}  // namespace injword::cli
