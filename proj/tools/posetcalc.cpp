// Command line front end: exact calculus of modules over finite posets.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "posetcalc/calculus.hpp"
#include "posetcalc/generators.hpp"
#include "posetcalc/io.hpp"
#include "posetcalc/pairings.hpp"

using namespace posetcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitParse = 4;

struct Options {
    std::string field_spec;
    bool json_out = false;
    unsigned long seed = 1;
    int trials = 40;

    Field field() const { return Field::parse(field_spec); }
    IsoOptions iso() const {
        IsoOptions o;
        o.trials = trials;
        o.seed = seed;
        return o;
    }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

PosetModule require_valid(PosetModule m) {
    auto rep = m.validate();
    if (!rep.ok) throw std::invalid_argument("module does not validate: " + rep.message);
    return m;
}

LineMap matching_line_map(const PosetPtr& base, const PosetModule& line_module) {
    LineMap lm = line_poset(base);
    if (!poset_equal(*lm.line, *line_module.poset()))
        throw std::invalid_argument(
            "the module's poset is not the line poset of the given base");
    return lm;
}

int dispatch(const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PosetError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis failure: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"posetcalc: exact calculus of modules over finite posets"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    const char* env_field = std::getenv("POSETCALC_FIELD");
    opt.field_spec = env_field ? env_field : "q";
    app.add_option("--field", opt.field_spec, "coefficient field: q or gfp:<p>");
    app.add_flag("--json", opt.json_out, "emit JSON instead of text");
    app.add_option("--seed", opt.seed, "seed for randomized operations");
    app.add_option("--trials", opt.trials, "trials for the randomized isomorphism search");

    std::function<int()> run;

    // validate
    {
        auto* c = app.add_subcommand("validate", "check a module for path independence");
        auto file = std::make_shared<std::string>();
        c->add_option("module", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetModule m = load_module(*file, opt.field());
                auto rep = m.validate();
                if (opt.json_out)
                    emit(json{{"ok", rep.ok}, {"message", rep.message}});
                else
                    std::cout << (rep.ok ? "ok" : "invalid: " + rep.message) << "\n";
                return rep.ok ? kExitOk : kExitValidation;
            };
        });
    }

    // line
    {
        auto* c = app.add_subcommand("line", "line poset of a poset, with front/back maps");
        auto file = std::make_shared<std::string>();
        c->add_option("poset", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetPtr p = load_poset(*file);
                LineMap lm = line_poset(p);
                if (opt.json_out) {
                    json j = poset_to_json(*lm.line);
                    json front = json::object(), back = json::object();
                    for (int e = 0; e < lm.line->size(); ++e) {
                        front[lm.line->label(e)] = p->label(lm.front[e]);
                        back[lm.line->label(e)] = p->label(lm.back[e]);
                    }
                    j["front"] = front;
                    j["back"] = back;
                    emit(j);
                } else {
                    std::cout << poset_to_text(*lm.line);
                }
                return kExitOk;
            };
        });
    }

    // components
    {
        auto* c = app.add_subcommand("components", "line components of a poset");
        auto file = std::make_shared<std::string>();
        c->add_option("poset", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetPtr p = load_poset(*file);
                LineComponents lc = line_components(*p);
                json comps = json::array();
                for (const auto& comp : lc.components) {
                    json edges = json::array();
                    for (const Cover& e : comp)
                        edges.push_back(json::array({p->label(e.first), p->label(e.second)}));
                    comps.push_back(edges);
                }
                json isolated = json::array();
                for (const Cover& e : lc.isolated)
                    isolated.push_back(json::array({p->label(e.first), p->label(e.second)}));
                if (opt.json_out) {
                    emit(json{{"components", comps}, {"isolated", isolated}});
                } else {
                    std::cout << "components: " << comps.dump() << "\n"
                              << "isolated: " << isolated.dump() << "\n";
                }
                return kExitOk;
            };
        });
    }

    // maxtree
    {
        auto* c = app.add_subcommand("maxtree", "line connected maximal tree");
        auto file = std::make_shared<std::string>();
        c->add_option("poset", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetPtr p = load_poset(*file);
                TreeSubgraph t;
                try {
                    t = line_connected_maximal_tree(*p);
                } catch (const PosetError& e) {
                    throw HypothesisError(e.what());
                }
                json edges = json::array();
                for (const Cover& e : t.edges)
                    edges.push_back(json::array({p->label(e.first), p->label(e.second)}));
                if (opt.json_out)
                    emit(json{{"edges", edges}});
                else
                    for (const Cover& e : t.edges)
                        std::cout << "edge: " << p->label(e.first) << " " << p->label(e.second)
                                  << "\n";
                return kExitOk;
            };
        });
    }

    // grad
    {
        auto* c = app.add_subcommand("grad", "gradient of a module");
        auto file = std::make_shared<std::string>();
        c->add_option("module", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetModule m = require_valid(load_module(*file, opt.field()));
                GradientResult g = gradient(m);
                DimVector d = dimvec(g.as_virtual());
                if (opt.json_out) {
                    emit(json{{"line_poset", poset_to_json(*g.line.line)},
                              {"front", module_to_json(g.plus)},
                              {"back", module_to_json(g.minus)},
                              {"dimvec", dimvec_to_json(d, *g.line.line)}});
                } else {
                    std::cout << report_dimvec_grid_text(d, *g.line.line);
                }
                return kExitOk;
            };
        });
    }

    // div
    {
        auto* c = app.add_subcommand("div", "left or right divergence of a line-poset module");
        auto file = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        auto side = std::make_shared<std::string>("left");
        c->add_option("module", *file)->required();
        c->add_option("--base", *base, "base poset file")->required();
        c->add_option("--side", *side)->check(CLI::IsMember({"left", "right"}));
        c->callback([&, file, base, side] {
            run = [&, file, base, side]() {
                PosetPtr bp = load_poset(*base);
                PosetModule n = require_valid(load_module(*file, opt.field()));
                LineMap lm = matching_line_map(bp, n);
                PosetModule nn(lm.line, n.field(), n.dims(), [&] {
                    std::map<Cover, Matrix> mm;
                    for (const Cover& cc : lm.line->covers()) mm.emplace(cc, n.cover_map(cc));
                    return mm;
                }());
                auto d = divergence(nn, lm,
                                    *side == "left" ? DivergenceSide::Left : DivergenceSide::Right);
                DimVector dv = dimvec(d);
                if (opt.json_out) {
                    json plus = json::array(), minus = json::array();
                    for (const auto& part : d.plus()) plus.push_back(module_to_json(part));
                    for (const auto& part : d.minus()) minus.push_back(module_to_json(part));
                    emit(json{{"plus", plus},
                              {"minus", minus},
                              {"dimvec", dimvec_to_json(dv, *bp)}});
                } else {
                    std::cout << report_dimvec_grid_text(dv, *bp);
                }
                return kExitOk;
            };
        });
    }

    // laplacian
    {
        auto* c = app.add_subcommand("laplacian", "left or right Laplacian of a module");
        auto file = std::make_shared<std::string>();
        auto side = std::make_shared<std::string>("left");
        c->add_option("module", *file)->required();
        c->add_option("--side", *side)->check(CLI::IsMember({"left", "right"}));
        c->callback([&, file, side] {
            run = [&, file, side]() {
                PosetModule m = require_valid(load_module(*file, opt.field()));
                LineMap lm = line_poset(m.poset());
                auto lap = laplacian(VirtualModule::of(m), lm,
                                     *side == "left" ? DivergenceSide::Left
                                                     : DivergenceSide::Right);
                DimVector dv = dimvec(lap);
                if (opt.json_out)
                    emit(json{{"dimvec", dimvec_to_json(dv, *m.poset())}});
                else
                    std::cout << report_dimvec_grid_text(dv, *m.poset());
                return kExitOk;
            };
        });
    }

    // pair
    {
        auto* c = app.add_subcommand("pair", "Hom or Euler pairing of two modules");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        auto kind = std::make_shared<std::string>("hom");
        c->add_option("first", *a)->required();
        c->add_option("second", *b)->required();
        c->add_option("--kind", *kind)->check(CLI::IsMember({"hom", "euler"}));
        c->callback([&, a, b, kind] {
            run = [&, a, b, kind]() {
                PosetModule ma = require_valid(load_module(*a, opt.field()));
                PosetModule mb = require_valid(load_module(*b, opt.field()));
                long value = *kind == "hom"
                                 ? hom_dim(ma, mb)
                                 : euler_pairing(VirtualModule::of(ma), VirtualModule::of(mb));
                if (opt.json_out)
                    emit(json{{"kind", *kind}, {"value", value}});
                else
                    std::cout << value << "\n";
                return kExitOk;
            };
        });
    }

    // rank / dimvec
    {
        auto* c = app.add_subcommand("rank", "rank invariant of a module");
        auto file = std::make_shared<std::string>();
        c->add_option("module", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetModule m = require_valid(load_module(*file, opt.field()));
                auto r = rank_invariant(m);
                if (opt.json_out) {
                    emit(rank_invariant_to_json(r, *m.poset()));
                } else {
                    for (auto& [rel, rank] : r)
                        std::cout << m.poset()->label(rel.first) << " <= "
                                  << m.poset()->label(rel.second) << ": " << rank << "\n";
                }
                return kExitOk;
            };
        });
    }
    {
        auto* c = app.add_subcommand("dimvec", "dimension vector of a module");
        auto file = std::make_shared<std::string>();
        c->add_option("module", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetModule m = require_valid(load_module(*file, opt.field()));
                if (opt.json_out)
                    emit(dimvec_to_json(dimvec(m), *m.poset()));
                else
                    std::cout << report_dimvec_grid_text(dimvec(m), *m.poset());
                return kExitOk;
            };
        });
    }

    // resolve / ext / cohomology
    {
        auto* c = app.add_subcommand("resolve", "minimal projective resolution");
        auto file = std::make_shared<std::string>();
        c->add_option("module", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetModule m = require_valid(load_module(*file, opt.field()));
                auto res = projective_resolution(m);
                json terms = json::array();
                for (size_t i = 0; i < res.terms.size(); ++i) {
                    json mult = json::object();
                    for (int v = 0; v < m.poset()->size(); ++v)
                        if (res.multiplicities[i][v])
                            mult[m.poset()->label(v)] = res.multiplicities[i][v];
                    terms.push_back(mult);
                }
                if (opt.json_out)
                    emit(json{{"length", res.length()}, {"terms", terms}});
                else
                    std::cout << "length " << res.length() << ", terms " << terms.dump() << "\n";
                return kExitOk;
            };
        });
    }
    {
        auto* c = app.add_subcommand("ext", "Ext dimensions between two modules");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        c->add_option("first", *a)->required();
        c->add_option("second", *b)->required();
        c->callback([&, a, b] {
            run = [&, a, b]() {
                PosetModule ma = require_valid(load_module(*a, opt.field()));
                PosetModule mb = require_valid(load_module(*b, opt.field()));
                auto e = ext_dims(ma, mb);
                if (opt.json_out)
                    emit(json{{"ext", e}});
                else {
                    for (size_t i = 0; i < e.size(); ++i)
                        std::cout << (i ? " " : "") << e[i];
                    std::cout << "\n";
                }
                return kExitOk;
            };
        });
    }
    {
        auto* c = app.add_subcommand("cohomology", "poset cohomology with module coefficients");
        auto file = std::make_shared<std::string>();
        c->add_option("module", *file)->required();
        c->callback([&, file] {
            run = [&, file]() {
                PosetModule m = require_valid(load_module(*file, opt.field()));
                auto h = cohomology_dims(m);
                if (opt.json_out)
                    emit(json{{"cohomology", h}});
                else {
                    for (size_t i = 0; i < h.size(); ++i)
                        std::cout << (i ? " " : "") << h[i];
                    std::cout << "\n";
                }
                return kExitOk;
            };
        });
    }

    // integrate
    {
        auto* c = app.add_subcommand("integrate",
                                     "module whose gradient is the injective class of an edge");
        auto file = std::make_shared<std::string>();
        auto edge = std::make_shared<std::string>();
        c->add_option("poset", *file)->required();
        c->add_option("--edge", *edge, "cover u,v")->required();
        c->callback([&, file, edge] {
            run = [&, file, edge]() {
                PosetPtr p = load_poset(*file);
                auto comma = edge->find(',');
                if (comma == std::string::npos)
                    throw IoError("--edge expects 'u,v'");
                Cover e{p->index_of(edge->substr(0, comma)),
                        p->index_of(edge->substr(comma + 1))};
                PosetModule m = integrate_injective(p, opt.field(), e, opt.iso());
                emit(module_to_json(m));
                return kExitOk;
            };
        });
    }

    // iso
    {
        auto* c = app.add_subcommand("iso", "randomized isomorphism check with certificates");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        c->add_option("first", *a)->required();
        c->add_option("second", *b)->required();
        c->callback([&, a, b] {
            run = [&, a, b]() {
                PosetModule ma = require_valid(load_module(*a, opt.field()));
                PosetModule mb = require_valid(load_module(*b, opt.field()));
                IsoResult r = iso_check(ma, mb, opt.iso());
                emit(iso_result_to_json(r, *ma.poset()));
                return kExitOk;
            };
        });
    }

    // gen
    {
        auto* gen = app.add_subcommand("gen", "instance generators");
        gen->require_subcommand(1);
        {
            auto* c = gen->add_subcommand("grid", "random grid module with surjective rows");
            auto m = std::make_shared<int>(2), n = std::make_shared<int>(2);
            auto max_dim = std::make_shared<int>(6);
            c->add_option("--m", *m)->required();
            c->add_option("--n", *n)->required();
            c->add_option("--max-dim", *max_dim);
            c->callback([&, m, n, max_dim] {
                run = [&, m, n, max_dim]() {
                    emit(module_to_json(gen_grid(*m, *n, opt.seed, *max_dim, opt.field())));
                    return kExitOk;
                };
            });
        }
        {
            auto* c = gen->add_subcommand("ladder", "zigzag or double zigzag ladder poset");
            auto n = std::make_shared<int>(3);
            auto type = std::make_shared<std::string>("zigzag");
            auto orientation = std::make_shared<std::string>("F");
            c->add_option("--n", *n)->required();
            c->add_option("--type", *type)->check(CLI::IsMember({"zigzag", "double-zigzag"}));
            c->add_option("--orientation", *orientation)->check(CLI::IsMember({"F", "B"}));
            c->callback([&, n, type, orientation] {
                run = [&, n, type, orientation]() {
                    auto p = gen_ladder(*n,
                                        *type == "zigzag" ? LadderType::Zigzag
                                                          : LadderType::DoubleZigzag,
                                        (*orientation)[0]);
                    if (opt.json_out)
                        emit(poset_to_json(*p));
                    else
                        std::cout << poset_to_text(*p);
                    return kExitOk;
                };
            });
        }
    }

    // report
    {
        auto* c = app.add_subcommand("report", "dimension-vector grid report");
        auto file = std::make_shared<std::string>();
        auto of_grad = std::make_shared<bool>(false);
        c->add_option("module", *file)->required();
        c->add_flag("--grad", *of_grad, "report the gradient's dimension vector");
        c->callback([&, file, of_grad] {
            run = [&, file, of_grad]() {
                PosetModule m = require_valid(load_module(*file, opt.field()));
                if (*of_grad) {
                    GradientResult g = gradient(m);
                    DimVector d = dimvec(g.as_virtual());
                    if (opt.json_out)
                        emit(report_dimvec_grid_json(d, *g.line.line));
                    else
                        std::cout << report_dimvec_grid_text(d, *g.line.line);
                } else {
                    DimVector d = dimvec(m);
                    if (opt.json_out)
                        emit(report_dimvec_grid_json(d, *m.poset()));
                    else
                        std::cout << report_dimvec_grid_text(d, *m.poset());
                }
                return kExitOk;
            };
        });
    }

    CLI11_PARSE(app, argc, argv);
    return dispatch(run);
}
