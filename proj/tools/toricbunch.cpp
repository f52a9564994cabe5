#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricbunch/divisor.hpp"
#include "toricbunch/document.hpp"
#include "toricbunch/errors.hpp"
#include "toricbunch/kleinschmidt.hpp"
#include "toricbunch/parallel.hpp"

using namespace toric;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;
constexpr int kExitResourceCap = 3;

struct Options {
    bool json = false;
    std::size_t threads = 1;
    std::size_t max_faces = 1u << 16;
    std::size_t max_enum = 24;
};

Json int_json(const Int& x) {
    static const Int safe("9007199254740992");
    if (x <= safe && x >= -safe) return Json(x.convert_to<long long>());
    return Json(x.str());
}

Json vec_json(const IntVector& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

Json rays_json(const Cone& c) {
    Json a = Json::array();
    for (const IntVector& r : c.rays()) a.push_back(vec_json(r));
    return a;
}

std::string vec_str(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

// Aligned text plot of a rank-2 weight system, the visualization used for
// bunches with two-dimensional class group.
std::string weight_picture(const std::vector<IntVector>& weights) {
    long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    std::map<std::pair<long, long>, int> mult;
    for (const IntVector& w : weights) {
        if (w[0] < -9 || w[0] > 9 || w[1] < -9 || w[1] > 9) return "";
        long x = w[0].convert_to<long>(), y = w[1].convert_to<long>();
        ++mult[{x, y}];
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    std::string out;
    for (long y = max_y; y >= min_y; --y) {
        out += "    ";
        for (long x = min_x; x <= max_x; ++x) {
            auto it = mult.find({x, y});
            if (it != mult.end())
                out += it->second > 9 ? '*' : static_cast<char>('0' + it->second);
            else if (x == 0 && y == 0)
                out += '+';
            else
                out += '.';
            out += ' ';
        }
        out += '\n';
    }
    return out;
}

Bunch to_standard_bunch(const Document& doc) {
    if (doc.kind == "bunch") return *doc.bunch;
    return fan_to_bunch(*doc.fan);
}

int cmd_check(const std::string& path, const Options& opt) {
    Document doc = load_document(path);
    Json out;
    out["kind"] = doc.kind;
    out["name"] = doc.name;
    out["valid"] = true;
    if (doc.kind == "bunch") {
        const Bunch& b = *doc.bunch;
        bool standard = is_standard(b);
        out["standard"] = standard;
        out["free"] = is_free(b);
        out["geometric"] = is_geometric(b);
        out["simple"] = is_simple(b);
        out["k_rank"] = b.k_rank();
        out["elements"] = b.elements().size();
        if (standard) {
            DictionaryReport d = dictionary(b);
            out["q_factorial"] = d.q_factorial;
            out["smooth"] = d.smooth;
            out["only_constant_functions"] = d.only_constant_functions;
            out["full"] = d.full;
            out["complete"] = d.complete;
        }
        if (opt.json) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "bunch \"" << doc.name << "\": valid\n";
            std::cout << "  k_rank " << b.k_rank() << ", " << b.elements().size()
                      << " element(s), " << b.covering_collection().size()
                      << " covering face(s)\n";
            std::cout << "  standard " << (standard ? "yes" : "no") << ", free "
                      << (is_free(b) ? "yes" : "no") << ", geometric "
                      << (is_geometric(b) ? "yes" : "no") << ", simple "
                      << (is_simple(b) ? "yes" : "no") << "\n";
            if (standard) {
                DictionaryReport d = dictionary(b);
                std::cout << "  Q-factorial " << (d.q_factorial ? "yes" : "no") << ", smooth "
                          << (d.smooth ? "yes" : "no") << ", O(X)=K "
                          << (d.only_constant_functions ? "yes" : "no") << ", full "
                          << (d.full ? "yes" : "no") << ", complete "
                          << (d.complete ? "yes" : "no") << "\n";
            }
            if (b.k_rank() == 2) {
                std::string pic = weight_picture(weight_vectors(b));
                if (!pic.empty()) std::cout << "  weights:\n" << pic;
            }
        }
    } else {
        const Fan& f = *doc.fan;
        FanOracles o = fan_oracles(f, opt.max_faces);
        out["n_rank"] = f.n_rank;
        out["rays"] = f.rays.size();
        out["max_cones"] = f.max_cones.size();
        out["smooth"] = o.smooth;
        out["simplicial"] = o.simplicial;
        out["complete"] = o.complete;
        out["quasiprojective"] = o.quasiprojective;
        out["nondegenerate"] = o.nondegenerate;
        out["two_complete"] = o.two_complete;
        if (opt.json) {
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "fan \"" << doc.name << "\": valid\n";
            std::cout << "  rank " << f.n_rank << ", " << f.rays.size() << " ray(s), "
                      << f.max_cones.size() << " maximal cone(s)\n";
            std::cout << "  smooth " << (o.smooth ? "yes" : "no") << ", simplicial "
                      << (o.simplicial ? "yes" : "no") << ", complete "
                      << (o.complete ? "yes" : "no") << ", quasiprojective "
                      << (o.quasiprojective ? "yes" : "no") << ", nondegenerate "
                      << (o.nondegenerate ? "yes" : "no") << ", 2-complete "
                      << (o.two_complete ? "yes" : "no") << "\n";
        }
    }
    return kExitOk;
}

int cmd_to_fan(const std::string& path, const Options&) {
    Document doc = load_document(path);
    if (doc.kind != "bunch") {
        std::cerr << "to-fan expects a bunch document\n";
        return kExitVerification;
    }
    Fan f = bunch_to_fan(*doc.bunch);
    std::cout << serialize(make_fan_document(f, doc.name.empty() ? "fan" : doc.name + "-fan"));
    return kExitOk;
}

int cmd_to_bunch(const std::string& path, const Options&) {
    Document doc = load_document(path);
    if (doc.kind != "fan") {
        std::cerr << "to-bunch expects a fan document\n";
        return kExitVerification;
    }
    Bunch b = fan_to_bunch(*doc.fan);
    std::cout << serialize(
        make_bunch_document(b, doc.name.empty() ? "bunch" : doc.name + "-bunch"));
    return kExitOk;
}

int cmd_cones(const std::string& path, const Options& opt) {
    Document doc = load_document(path);
    Bunch b = to_standard_bunch(doc);
    if (!is_standard(b)) throw NotStandard("divisor cones require a standard bunch");
    DivisorClassReport r = divisor_report(b);
    if (opt.json) {
        Json out;
        out["cl_rank"] = r.cl_rank;
        Json tor = Json::array();
        for (const Int& t : r.cl_torsion) tor.push_back(int_json(t));
        out["cl_torsion"] = tor;
        out["pic_q_dim"] = r.betti2;
        out["b2"] = r.betti2;
        out["semiample_rays"] = rays_json(r.semiample);
        out["ample_nonempty"] = r.ample_nonempty;
        if (r.mori) {
            out["mori_rays"] = rays_json(*r.mori);
            Json lin = Json::array();
            for (std::size_t i = 0; i < r.mori->lineality_basis().rows(); ++i)
                lin.push_back(vec_json(r.mori->lineality_basis().row(i)));
            out["mori_lineality"] = lin;
        }
        if (r.canonical) out["canonical_class"] = vec_json(*r.canonical);
        if (r.q_gorenstein) out["q_gorenstein"] = *r.q_gorenstein;
        if (r.fano) out["fano"] = *r.fano;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "divisor class data";
        if (!doc.name.empty()) std::cout << " for \"" << doc.name << "\"";
        std::cout << "\n";
        std::cout << "  Cl rank        " << r.cl_rank;
        if (!r.cl_torsion.empty()) {
            std::cout << "  torsion";
            for (const Int& t : r.cl_torsion) std::cout << " Z/" << t.str();
        }
        std::cout << "\n";
        std::cout << "  dim Pic_Q (b2) " << r.betti2 << "\n";
        std::cout << "  semiample cone rays:";
        for (const IntVector& ray : r.semiample.rays()) std::cout << " " << vec_str(ray);
        if (r.semiample.rays().empty()) std::cout << " (zero cone)";
        std::cout << "\n";
        std::cout << "  ample cone     " << (r.ample_nonempty ? "nonempty" : "empty") << "\n";
        if (r.mori) {
            std::cout << "  Mori cone rays:";
            for (const IntVector& ray : r.mori->rays()) std::cout << " " << vec_str(ray);
            for (std::size_t i = 0; i < r.mori->lineality_basis().rows(); ++i)
                std::cout << " +-" << vec_str(r.mori->lineality_basis().row(i));
            std::cout << (r.mori->is_strictly_convex() ? "  (strictly convex: projective)"
                                                       : "  (not strictly convex)")
                      << "\n";
        }
        if (r.canonical) std::cout << "  canonical class " << vec_str(*r.canonical) << "\n";
        if (r.q_gorenstein)
            std::cout << "  Q-Gorenstein   " << (*r.q_gorenstein ? "yes" : "no") << "\n";
        if (r.fano) std::cout << "  Fano           " << (*r.fano ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_classify(std::size_t dim, long max_b, bool fano_only, const Options& opt) {
    auto list = enumerate_kleinschmidt(dim, Int(max_b));
    Json rows = Json::array();
    std::size_t literal_agreements = 0;
    std::vector<std::string> lines;
    for (const KleinschmidtData& d : list) {
        bool fano = kleinschmidt_is_fano(d);
        bool literal = kleinschmidt_inequality_literal(d);
        if (literal == fano) ++literal_agreements;
        if (fano_only && !fano) continue;
        Json row;
        Json bs = Json::array();
        for (const Int& x : d.b) bs.push_back(int_json(x));
        Json mus = Json::array();
        for (const Int& x : d.mu) mus.push_back(int_json(x));
        row["n"] = d.n();
        row["b"] = bs;
        row["mu"] = mus;
        row["fano"] = fano;
        row["printed_inequality"] = literal;
        rows.push_back(row);
        std::string line = "  n=" + std::to_string(d.n()) + "  b=(";
        for (std::size_t i = 0; i < d.b.size(); ++i) line += (i ? "," : "") + d.b[i].str();
        line += ")  mu=(";
        for (std::size_t i = 0; i < d.mu.size(); ++i) line += (i ? "," : "") + d.mu[i].str();
        line += ")  fano=";
        line += fano ? "yes" : "no";
        if (literal != fano) line += "  [printed inequality disagrees]";
        lines.push_back(line);
    }
    if (opt.json) {
        Json out;
        out["dim"] = dim;
        out["max_b"] = max_b;
        out["rows"] = rows;
        out["printed_inequality_agreement"] =
            std::to_string(literal_agreements) + "/" + std::to_string(list.size());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "smooth 2-complete varieties with Cl = Z^2, dim " << dim << ", b <= "
                  << max_b << ": " << list.size() << " classes\n";
        for (const std::string& l : lines) std::cout << l << "\n";
        std::cout << "printed Fano inequality agrees on " << literal_agreements << "/"
                  << list.size() << " (diagnostic; ample test is authoritative)\n";
    }
    return kExitOk;
}

int cmd_enumerate(const std::string& path, const Options& opt) {
    Document doc = load_document(path);
    Bunch base = to_standard_bunch(doc);
    auto bunches = enumerate_bunches(base.pc(), opt.max_enum);
    if (opt.json) {
        Json out = Json::array();
        for (const Bunch& b : bunches) {
            Json entry;
            Json theta = Json::array();
            for (const BunchElement& el : b.elements()) {
                Json s = Json::array();
                for (std::size_t i : el.witness) s.push_back(i);
                theta.push_back(s);
            }
            entry["bunch"] = theta;
            entry["standard"] = is_standard(b);
            out.push_back(entry);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << bunches.size() << " bunch(es) in the projected cone of \"" << doc.name
                  << "\"\n";
        for (const Bunch& b : bunches) {
            std::cout << "  {";
            for (std::size_t e = 0; e < b.elements().size(); ++e) {
                if (e) std::cout << ", ";
                const auto& w = b.elements()[e].witness;
                if (w.empty()) {
                    std::cout << "{0}";
                } else {
                    std::cout << "cone(";
                    for (std::size_t i = 0; i < w.size(); ++i)
                        std::cout << (i ? "," : "") << w[i];
                    std::cout << ")";
                }
            }
            std::cout << "}" << (is_standard(b) ? "  [standard]" : "") << "\n";
        }
    }
    return kExitOk;
}

int cmd_example(const std::string& name, const Options&) {
    std::cout << serialize(builtin_example(name));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bunches of cones in the divisor class group: Gale-dual toric computations"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("TORICBUNCH_MAX_ENUM")) opt.max_enum = std::atol(env);
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--threads", opt.threads, "worker threads for pairwise checks");
    app.add_option("--max-faces", opt.max_faces, "cap on face enumerations");
    app.add_option("--max-enum", opt.max_enum, "cap on bunch enumeration faces");

    std::string path, example_name;
    std::size_t dim = 2;
    long max_b = 2;
    bool fano_only = false;

    CLI::App* check = app.add_subcommand("check", "verify a bunch or fan document");
    check->fallthrough();
    check->add_option("path", path)->required();
    CLI::App* tofan = app.add_subcommand("to-fan", "convert a bunch document to its fan");
    tofan->fallthrough();
    tofan->add_option("path", path)->required();
    CLI::App* tobunch = app.add_subcommand("to-bunch", "convert a fan document to its bunch");
    tobunch->fallthrough();
    tobunch->add_option("path", path)->required();
    CLI::App* cones = app.add_subcommand("cones", "divisor class cones and invariants");
    cones->fallthrough();
    cones->add_option("path", path)->required();
    CLI::App* classify = app.add_subcommand("classify", "rank-2 classification");
    classify->fallthrough();
    classify->add_option("--dim", dim, "variety dimension")->required();
    classify->add_option("--max-b", max_b, "largest b parameter")->required();
    classify->add_flag("--fano-only", fano_only, "list Fano classes only");
    CLI::App* enumerate = app.add_subcommand("enumerate-bunches",
                                             "all bunches in the document's projected cone");
    enumerate->fallthrough();
    enumerate->add_option("path", path)->required();
    CLI::App* example = app.add_subcommand("example", "print a built-in example document");
    example->fallthrough();
    std::string names;
    for (const std::string& n : builtin_example_names()) names += (names.empty() ? "" : ", ") + n;
    example->add_option("name", example_name, "one of: " + names)->required();

    CLI11_PARSE(app, argc, argv);
    set_thread_count(opt.threads);

    try {
        if (check->parsed()) return cmd_check(path, opt);
        if (tofan->parsed()) return cmd_to_fan(path, opt);
        if (tobunch->parsed()) return cmd_to_bunch(path, opt);
        if (cones->parsed()) return cmd_cones(path, opt);
        if (classify->parsed()) return cmd_classify(dim, max_b, fano_only, opt);
        if (enumerate->parsed()) return cmd_enumerate(path, opt);
        if (example->parsed()) return cmd_example(example_name, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const EnumerationTooLarge& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const FaceEnumerationTooLarge& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const SearchTooLarge& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const UnknownExample& e) {
        std::cerr << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}
