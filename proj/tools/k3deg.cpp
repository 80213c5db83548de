// k3deg: command-line access to the lattice, fan, sphere and Kulikov
// computations. JSON goes to stdout.
#include "k3deg/acceptance.hpp"
#include "k3deg/kulikov.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace k3deg;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long long> parse_ints(const std::string& s)
{
    std::vector<long long> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || tok.find_first_not_of(" \t", used) != std::string::npos)
            throw UsageError("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

json vertex_list(Mask m)
{
    return vertices_of(m);
}

// Either 24 comma-separated entries, or zeros plus explicit values routed
// through the relations.
struct VectorInput {
    std::string entries;
    std::string zeros;
    std::vector<std::string> sets;

    void attach(CLI::App* app)
    {
        app->add_option("vector", entries, "24 comma-separated integers");
        app->add_option("--zeros", zeros, "comma-separated indices where a vanishes");
        app->add_option("--set", sets, "explicit entry i=v (repeatable)");
    }

    AVector get(const RootSystem& rs) const
    {
        if (!entries.empty()) {
            if (!zeros.empty() || !sets.empty())
                throw UsageError("give either the full vector or --zeros/--set");
            return AVector::from_ints(parse_ints(entries));
        }
        if (zeros.empty() && sets.empty()) throw UsageError("an a-vector is required");
        std::map<int, Rat> partial;
        auto index = [](long long i) {
            if (i < 0 || i >= kRoots) throw UsageError("index out of range: " + std::to_string(i));
            return static_cast<int>(i);
        };
        if (!zeros.empty())
            for (long long i : parse_ints(zeros)) partial[index(i)] = 0;
        for (const std::string& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw UsageError("--set expects i=v, got '" + s + "'");
            const auto i = parse_ints(s.substr(0, eq));
            const auto v = parse_ints(s.substr(eq + 1));
            if (i.size() != 1 || v.size() != 1) throw UsageError("--set expects i=v, got '" + s + "'");
            partial[index(i[0])] = v[0];
        }
        return complete_a(rs, partial);
    }
};

json classify_json(const RootSystem& rs, Mask m)
{
    const Subdiagram d = classify(rs, m);
    json j{{"vertices", vertex_list(m)}, {"class", class_name(d.cls)}, {"rank", d.rank}};
    json comps = json::array();
    for (Mask c : d.components) {
        json cj{{"vertices", vertex_list(c)}, {"class", class_name(definiteness(rs, c))}};
        if (definiteness(rs, c) != DiagramClass::Indefinite) {
            const ShapeLabel sh = shape(rs, c);
            cj["shape"] = sh.dynkin_type();
            cj["label"] = sh.ascii();
        }
        comps.push_back(cj);
    }
    if (d.components.size() == 1 && comps[0].contains("shape")) {
        j["shape"] = comps[0]["shape"];
        j["label"] = comps[0]["label"];
    }
    j["components"] = comps;
    return j;
}

json cone_json(const ConeDescriptor& c)
{
    return {{"zero_set", vertex_list(c.zero_set)},
            {"class", class_name(c.cls)},
            {"relevant_zero_set", vertex_list(c.relevant_zero_set)},
            {"type", c.type},
            {"toroidal_dimension", c.tor_dim},
            {"slc_dimension", c.slc_dim}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Combinatorics of degenerations of degree-2 K3 surfaces"};
    app.require_subcommand(1);

    app.add_subcommand("gram", "Gram matrix of the 24 roots");

    auto* enumerate = app.add_subcommand("enumerate", "count elliptic subdiagrams of a given rank");
    int rank = 0, threads = 1;
    std::string mod = "none";
    enumerate->add_option("--rank", rank, "rank")->required()->check(CLI::Range(0, 19));
    enumerate->add_option("--mod", mod, "symmetry quotient")->check(CLI::IsMember({"none", "s3"}));
    enumerate->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    app.add_subcommand("parabolics", "maximal parabolic subdiagrams");

    auto* classify_cmd = app.add_subcommand("classify", "classify a subdiagram");
    std::string vertices;
    classify_cmd->add_option("vertices", vertices, "comma-separated vertices")->required();

    auto* reduce = app.add_subcommand("reduce", "reflect a vector into the fundamental chamber");
    VectorInput reduce_in;
    reduce_in.attach(reduce);

    auto* cone = app.add_subcommand("cone", "cone of the Coxeter fan containing a chamber vector");
    VectorInput cone_in;
    cone_in.attach(cone);

    auto* ias = app.add_subcommand("ias", "integral-affine spheres");
    ias->require_subcommand(1);
    auto* ias_build = ias->add_subcommand("build", "build B(a)");
    VectorInput ias_in;
    ias_in.attach(ias_build);
    std::string svg_path, placement = "symmetric";
    ias_build->add_option("--svg", svg_path, "write an SVG drawing to this file");
    ias_build->add_option("--placement", placement, "cut placement")
        ->check(CLI::IsMember({"symmetric", "vertex"}));

    auto* label = app.add_subcommand("label", "stable degeneration label");
    VectorInput label_in;
    label_in.attach(label);

    auto* kulikov = app.add_subcommand("kulikov", "Kulikov model statistics");
    VectorInput kulikov_in;
    kulikov_in.attach(kulikov);

    auto* verify = app.add_subcommand("verify-paper", "run the regression checks");
    verify->add_option("--threads", threads, "worker threads for the enumeration")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const RootSystem& rs = roots();
    try {
        json out;
        if (app.got_subcommand("gram")) {
            out = to_json(rs);
        } else if (enumerate->parsed()) {
            const EnumerationResult e = threads > 1 ? enumerate_elliptic(rs, 19, threads) : full_enumeration();
            const bool s3 = mod == "s3";
            out = {{"rank", rank}, {"mod", mod}, {"count", s3 ? e.orbits[rank] : e.total[rank]}};
            if (s3 && rank == 18) out["rays"] = e.orbits[18] + survey_parabolics(rs).maximal_mod_s3.size();
        } else if (app.got_subcommand("parabolics")) {
            const ParabolicSurvey s = survey_parabolics(rs);
            json classes = json::array();
            for (Mask m : s.maximal_mod_s3) classes.push_back(classify_json(rs, m));
            out = {{"maximal_count", s.maximal.size()},
                   {"classes", classes},
                   {"parabolic_count", s.parabolic_count},
                   {"all_contained", s.all_contained}};
        } else if (classify_cmd->parsed()) {
            std::vector<int> vs;
            for (long long v : parse_ints(vertices)) {
                if (v < 0 || v >= kRoots) throw UsageError("vertex out of range: " + std::to_string(v));
                vs.push_back(static_cast<int>(v));
            }
            out = classify_json(rs, mask_of(vs));
        } else if (reduce->parsed()) {
            const AVector v = reduce_in.get(rs);
            const Reduction r = reduce_to_fundamental(rs, v);
            json cert = json::array();
            for (const Rat& c : r.certificate) cert.push_back(rat_json(c));
            out = {{"input", to_json(v)["a"]}, {"result", to_json(r.result)}, {"word", r.word}, {"certificate", cert}};
        } else if (cone->parsed()) {
            out = cone_json(cone_of(rs, cone_in.get(rs)));
        } else if (ias_build->parsed()) {
            const AVector a = ias_in.get(rs);
            const IASResult r = build_ias(rs, a, placement == "vertex" ? Placement::VertexPreferred : Placement::Symmetric);
            if (r.sphere) {
                out = to_json(*r.sphere);
                if (!svg_path.empty()) {
                    std::ofstream f(svg_path);
                    if (!f) throw UsageError("cannot write " + svg_path);
                    f << to_svg(*r.sphere);
                }
            } else {
                out = to_json(*r.interval);
                if (!svg_path.empty()) throw Error(ErrorKind::Degenerate, "an interval has no polygon drawing");
            }
        } else if (label->parsed()) {
            out = to_json(stable_model_label(rs, label_in.get(rs)));
        } else if (kulikov->parsed()) {
            const AVector a = kulikov_in.get(rs);
            if (norm(rs, a) == 0) {
                out = to_json(typeII_model(rs, a));
            } else {
                const Triangulation t = triangulate(rs, a);
                out = to_json(t);
                json plan = json::array();
                for (const ComponentFate& f : contraction_plan(rs, t, a)) {
                    json fj{{"vertex", f.vertex_class}, {"fate", fate_name(f.fate)}, {"charge", f.charge}};
                    if (!f.shape.empty()) fj["shape"] = f.shape;
                    plan.push_back(fj);
                }
                out["contraction"] = plan;
                out["label"] = stable_model_label(rs, a).text;
            }
        } else if (verify->parsed()) {
            json criteria = json::array();
            int passed = 0;
            const auto results = run_acceptance(threads);
            for (const CriterionResult& r : results) {
                criteria.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                passed += r.pass;
            }
            out = {{"passed", passed}, {"total", results.size()}, {"criteria", criteria}};
            std::cout << out.dump(2) << '\n';
            return passed == static_cast<int>(results.size()) ? 0 : kExitMismatch;
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
        return kExitValidation;
    }
}
