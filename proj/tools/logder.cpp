// logder: construct hyperplane arrangements, compute their logarithmic
// derivation modules, and decide freeness properties with verifiable
// certificates. Verbs compose through the arrangement text format; `-`
// reads it from standard input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logder/logder.hpp"

using json = nlohmann::ordered_json;
using namespace logder;

namespace {

struct Options {
    std::string input = "-";
    std::string positional;
    std::string family;
    long n = 0, r = 0, p = 0, l = 0;
    std::string basis_path;
    std::string certificate;
    std::string hyperplane_form;
    long hyperplane_index = 0;
    int max_degree = 4;
    size_t jobs = 1;
    bool json_out = false;
    bool audit = false;
};

ArrangementParse load_arrangement(const Options& opt) {
    const std::string& path = opt.positional.empty() ? opt.input : opt.positional;
    if (path == "-") return read_arrangement(std::cin);
    return read_arrangement_file(path);
}

std::vector<std::string> form_strings(const Arrangement& a) {
    std::vector<std::string> out;
    for (const LinearForm& h : a) out.push_back(h.str());
    return out;
}

json arrangement_json(const Arrangement& a) {
    json j;
    j["field"] = a.field().conductor();
    j["dim"] = a.dim();
    j["size"] = a.size();
    j["forms"] = form_strings(a);
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

int run_catalog(const Options& opt) {
    FamilySpec spec = FamilySpec::parse_tag(opt.family);
    spec.n = opt.n;
    spec.r = opt.r;
    spec.p = opt.p;
    spec.l = opt.l;
    Arrangement a = spec.build();
    if (opt.json_out) {
        emit(arrangement_json(a));
    } else {
        write_arrangement(std::cout, a);
    }
    return 0;
}

int run_lattice(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    IntersectionLattice lat = IntersectionLattice::build(a);
    if (opt.json_out) {
        json j;
        j["dim"] = lat.dim();
        j["size"] = lat.size();
        json nodes = json::array();
        for (size_t r = 0; r < lat.by_rank().size(); ++r) {
            for (size_t i : lat.by_rank()[r]) {
                json n;
                n["rank"] = r;
                n["key"] = lat.node(i).space.key();
                n["mobius"] = lat.node(i).mobius.get_str();
                nodes.push_back(std::move(n));
            }
        }
        j["nodes"] = std::move(nodes);
        emit(j);
    } else {
        std::cout << "dim " << lat.dim() << ", " << lat.size() << " nodes, max rank "
                  << lat.max_rank() << "\n";
        for (size_t r = 0; r < lat.by_rank().size(); ++r) {
            std::cout << "rank " << r << " (" << lat.by_rank()[r].size() << "):\n";
            for (size_t i : lat.by_rank()[r])
                std::cout << "  " << lat.node(i).space.key() << "  mu "
                          << lat.node(i).mobius.get_str() << "\n";
        }
    }
    return 0;
}

int run_charpoly(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    IntersectionLattice lat = IntersectionLattice::build(a);
    IntPoly chi = characteristic_polynomial(lat);
    IntPoly pi = poincare_poly(lat);
    if (opt.json_out) {
        json j;
        j["characteristic"] = chi.str();
        j["poincare"] = pi.str();
        emit(j);
    } else {
        std::cout << "chi(t) = " << chi.str() << "\n";
        std::cout << "pi(t) = " << pi.str() << "\n";
    }
    return 0;
}

int run_restrict(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    LinearForm h = [&] {
        if (!opt.hyperplane_form.empty()) {
            std::vector<std::string> toks;
            std::istringstream in(opt.hyperplane_form);
            std::string tok;
            while (in >> tok) toks.push_back(tok);
            if (toks.size() != a.dim())
                throw error("--form needs " + std::to_string(a.dim()) + " scalars");
            std::vector<CycloNum> coeffs;
            for (const std::string& t : toks) coeffs.push_back(parse_scalar(a.field(), t, 0));
            return LinearForm::make(std::move(coeffs));
        }
        if (opt.hyperplane_index < 1 || static_cast<size_t>(opt.hyperplane_index) > a.size())
            throw error("--hyperplane index out of range (1.." + std::to_string(a.size()) + ")");
        return a[static_cast<size_t>(opt.hyperplane_index) - 1];
    }();
    auto [res, map] = restrict(a, h);
    if (opt.json_out) {
        json j = arrangement_json(res);
        j["restricted_to"] = h.str();
        j["map"] = map.str();
        emit(j);
    } else {
        std::cout << "# restriction to " << h.str() << "\n";
        std::cout << "# " << map.str() << "\n";
        write_arrangement(std::cout, res);
    }
    return 0;
}

int run_derivations(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    std::vector<ModVec> gens = minimal_generators(derivation_module(a));
    if (opt.json_out) {
        json j;
        j["generator_count"] = gens.size();
        json list = json::array();
        for (const ModVec& g : gens) {
            Derivation d = Derivation::from_vec(g);
            json e;
            e["degree"] = d.pdeg ? json(*d.pdeg) : json();
            json comps = json::array();
            for (size_t i = 0; i < g.rank(); ++i) comps.push_back(g[i].str());
            e["components"] = std::move(comps);
            list.push_back(std::move(e));
        }
        j["generators"] = std::move(list);
        emit(j);
    } else {
        std::cout << "generators: " << gens.size() << "\n";
        for (const ModVec& g : gens) {
            Derivation d = Derivation::from_vec(g);
            std::cout << "deg " << (d.pdeg ? std::to_string(*d.pdeg) : "-") << ": " << d.str()
                      << "\n";
        }
    }
    return 0;
}

void write_basis_certificate(const std::string& path, const FreenessReport& rep,
                             const Arrangement& a) {
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    write_basis(out, rep.basis, a.field(), a.dim());
}

int run_free(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    FreenessReport rep = is_free(a);
    if (rep.free && !opt.certificate.empty()) write_basis_certificate(opt.certificate, rep, a);
    if (opt.json_out) {
        json j;
        j["free"] = rep.free;
        j["generator_count"] = rep.generator_count;
        if (rep.free) {
            j["exponents"] = rep.exponents;
            j["saito_constant"] = rep.saito_constant.str();
        }
        emit(j);
    } else {
        std::cout << "free: " << (rep.free ? "yes" : "no") << "\n";
        std::cout << "generators: " << rep.generator_count << "\n";
        if (rep.free) {
            std::cout << "exponents: " << join_ints(rep.exponents) << "\n";
            std::cout << "saito constant: " << rep.saito_constant.str() << "\n";
        }
    }
    return rep.free ? 0 : 1;
}

int run_exponents(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    FreenessReport rep = is_free(a);
    if (!rep.free) {
        std::cerr << "not free (" << rep.generator_count << " generators)\n";
        return 1;
    }
    if (opt.json_out) {
        json j;
        j["exponents"] = rep.exponents;
        emit(j);
    } else {
        std::cout << join_ints(rep.exponents) << "\n";
    }
    return 0;
}

int run_saito(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    if (opt.basis_path.empty()) throw error("saito needs --basis <path>");
    BasisParse basis = read_basis_file(opt.basis_path);
    if (basis.dim != a.dim()) throw error("basis dimension does not match the arrangement");
    if (basis.conductor != a.field().conductor())
        throw error("basis field does not match the arrangement");
    auto [ok, c] = saito_check(basis.derivations, a);
    if (opt.json_out) {
        json j;
        j["accepted"] = ok;
        if (ok) j["constant"] = c.str();
        emit(j);
    } else {
        std::cout << "accepted: " << (ok ? "yes" : "no") << "\n";
        if (ok) std::cout << "constant: " << c.str() << "\n";
    }
    return ok ? 0 : 1;
}

void write_chain_certificate(const std::string& path, const Arrangement& a,
                             const InductiveChain& chain) {
    json j;
    json order = json::array();
    for (const LinearForm& h : chain.ordering) order.push_back(a.index_of(h) + 1);
    j["ordering"] = std::move(order);
    j["step_exponents"] = chain.step_exponents;
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

int run_indfree(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    std::optional<InductiveChain> chain = is_inductively_free(a);
    bool verified = false;
    if (chain) {
        verified = chain_verify(a, *chain, opt.audit);
        if (!opt.certificate.empty()) write_chain_certificate(opt.certificate, a, *chain);
    }
    if (opt.json_out) {
        json j;
        j["inductively_free"] = chain.has_value();
        if (chain) {
            json order = json::array();
            for (const LinearForm& h : chain->ordering) order.push_back(a.index_of(h) + 1);
            j["ordering"] = std::move(order);
            j["step_exponents"] = chain->step_exponents;
            j["final_exponents"] = chain->final_exponents(a.dim());
            j["verified"] = verified;
            j["audit"] = opt.audit;
        }
        emit(j);
    } else {
        std::cout << "inductively free: " << (chain ? "yes" : "no") << "\n";
        if (chain) {
            std::string order;
            for (const LinearForm& h : chain->ordering) {
                if (!order.empty()) order += " ";
                order += std::to_string(a.index_of(h) + 1);
            }
            std::cout << "order: " << order << "\n";
            std::cout << "final exponents: " << join_ints(chain->final_exponents(a.dim()))
                      << "\n";
            std::cout << "verified: " << (verified ? (opt.audit ? "audit" : "fast") : "FAILED")
                      << "\n";
        }
    }
    if (!chain) return 1;
    return verified ? 0 : 2;
}

int run_heredfree(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    HereditaryReport rep = is_hereditarily_free(a, opt.jobs);
    if (opt.json_out) {
        json j;
        j["hereditarily_free"] = rep.hereditarily_free;
        json nodes = json::array();
        for (const NodeReport& n : rep.nodes) {
            json e;
            e["rank"] = n.rank;
            e["key"] = n.space.key();
            e["restriction_dim"] = n.restriction_dim;
            e["restriction_size"] = n.restriction_size;
            e["shortcut"] = n.shortcut;
            e["free"] = n.free;
            if (n.free) e["exponents"] = n.exponents;
            nodes.push_back(std::move(e));
        }
        j["nodes"] = std::move(nodes);
        emit(j);
    } else {
        std::cout << "hereditarily free: " << (rep.hereditarily_free ? "yes" : "no") << "\n";
        std::cout << "nodes: " << rep.nodes.size() << "\n";
        for (const NodeReport& n : rep.nodes) {
            std::cout << "rank " << n.rank << " " << n.space.key() << " size "
                      << n.restriction_size << " " << (n.free ? "free" : "NOT FREE");
            if (n.free) std::cout << " exps " << join_ints(n.exponents);
            std::cout << (n.shortcut ? " (shortcut)" : " (computed)") << "\n";
        }
    }
    return rep.hereditarily_free ? 0 : 1;
}

int run_oracle(const Options& opt) {
    Arrangement a = load_arrangement(opt).arrangement;
    if (opt.max_degree < 0) throw error("--max-degree must be non-negative");
    FreenessReport rep = is_free(a);
    bool all_agree = true;
    json degrees = json::array();
    std::ostringstream text;
    for (int p = 0; p <= opt.max_degree; ++p) {
        size_t dim = degreewise_dim_oracle(a, p);
        json e;
        e["p"] = p;
        e["dim"] = dim;
        text << "p " << p << ": dim " << dim;
        if (rep.free) {
            Integer predicted = hilbert_prediction(rep.exponents, a.dim(), p);
            bool agree = predicted == Integer(static_cast<long>(dim));
            if (!agree) all_agree = false;
            e["predicted"] = predicted.get_str();
            e["agrees"] = agree;
            text << ", predicted " << predicted.get_str() << (agree ? "" : "  MISMATCH");
        }
        text << "\n";
        degrees.push_back(std::move(e));
    }
    if (opt.json_out) {
        json j;
        j["free"] = rep.free;
        if (rep.free) j["exponents"] = rep.exponents;
        j["max_degree"] = opt.max_degree;
        j["degrees"] = std::move(degrees);
        if (rep.free) j["all_agree"] = all_agree;
        emit(j);
    } else {
        if (rep.free) std::cout << "exponents: " << join_ints(rep.exponents) << "\n";
        std::cout << text.str();
    }
    return all_agree ? 0 : 1;
}

void add_input(CLI::App* cmd, Options& opt) {
    cmd->add_option("path", opt.positional, "arrangement file, or - for stdin");
    cmd->add_option("--input", opt.input, "arrangement file, or - for stdin");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact logarithmic-derivation computations on hyperplane arrangements"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* catalog = app.add_subcommand("catalog", "emit a built-in arrangement family");
    catalog->add_option("--family", opt.family, "braid | coxeterB | coxeterD | monomial")
        ->required();
    catalog->add_option("--n", opt.n, "braid dimension / Coxeter rank");
    catalog->add_option("--r", opt.r, "monomial: order of the root of unity");
    catalog->add_option("--p", opt.p, "monomial: index parameter (divides r)");
    catalog->add_option("--l", opt.l, "monomial: dimension");
    catalog->add_flag("--json", opt.json_out, "structured output");

    CLI::App* lattice = app.add_subcommand("lattice", "intersection lattice with Mobius values");
    add_input(lattice, opt);
    lattice->add_flag("--json", opt.json_out, "structured output");

    CLI::App* charpoly =
        app.add_subcommand("charpoly", "characteristic and Poincare polynomials");
    add_input(charpoly, opt);
    charpoly->add_flag("--json", opt.json_out, "structured output");

    CLI::App* restrictv =
        app.add_subcommand("restrict", "restrict to a hyperplane; emits the arrangement format");
    add_input(restrictv, opt);
    restrictv->add_option("--hyperplane", opt.hyperplane_index, "1-based hyperplane index");
    restrictv->add_option("--form", opt.hyperplane_form,
                          "hyperplane as whitespace-separated scalars");
    restrictv->add_flag("--json", opt.json_out, "structured output");

    CLI::App* derivations =
        app.add_subcommand("derivations", "minimal generators of the derivation module");
    add_input(derivations, opt);
    derivations->add_flag("--json", opt.json_out, "structured output");

    CLI::App* freev = app.add_subcommand("free", "decide freeness (exit 0 free, 1 not)");
    add_input(freev, opt);
    freev->add_flag("--json", opt.json_out, "structured output");
    freev->add_option("--certificate", opt.certificate, "write the basis file here");

    CLI::App* exponents = app.add_subcommand("exponents", "exponents of a free arrangement");
    add_input(exponents, opt);
    exponents->add_flag("--json", opt.json_out, "structured output");

    CLI::App* saito = app.add_subcommand("saito", "check a basis certificate (exit 0 accepted)");
    add_input(saito, opt);
    saito->add_option("--basis", opt.basis_path, "basis certificate file")->required();
    saito->add_flag("--json", opt.json_out, "structured output");

    CLI::App* indfree =
        app.add_subcommand("indfree", "decide inductive freeness (exit 0 free, 1 not)");
    add_input(indfree, opt);
    indfree->add_flag("--json", opt.json_out, "structured output");
    indfree->add_flag("--audit", opt.audit, "re-run the freeness decision at every chain step");
    indfree->add_option("--certificate", opt.certificate, "write the chain file here");

    CLI::App* heredfree =
        app.add_subcommand("heredfree", "decide hereditary freeness (exit 0 free, 1 not)");
    add_input(heredfree, opt);
    heredfree->add_flag("--json", opt.json_out, "structured output");
    heredfree->add_option("--jobs", opt.jobs, "worker threads (output is jobs-independent)");

    CLI::App* oracle =
        app.add_subcommand("oracle", "degreewise dimensions of the derivation module");
    add_input(oracle, opt);
    oracle->add_option("--max-degree", opt.max_degree, "highest degree to measure (default 4)");
    oracle->add_flag("--json", opt.json_out, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (catalog->parsed()) return run_catalog(opt);
        if (lattice->parsed()) return run_lattice(opt);
        if (charpoly->parsed()) return run_charpoly(opt);
        if (restrictv->parsed()) return run_restrict(opt);
        if (derivations->parsed()) return run_derivations(opt);
        if (freev->parsed()) return run_free(opt);
        if (exponents->parsed()) return run_exponents(opt);
        if (saito->parsed()) return run_saito(opt);
        if (indfree->parsed()) return run_indfree(opt);
        if (heredfree->parsed()) return run_heredfree(opt);
        if (oracle->parsed()) return run_oracle(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no verb\n";
    return 2;
}
