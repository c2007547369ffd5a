#include "cdgforge/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cdgforge {

namespace {

using json = nlohmann::ordered_json;

struct Store {
    Field field{3};
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, FinModule> modules;
    std::map<std::string, CdgRingPtr> rings;
    std::map<std::string, MixedComplex> mixed;
    std::map<std::string, Duplex> duplexes;
    std::map<std::string, CdgModule> cdgs;
};

std::vector<Scalar> parse_element(const Field& f, const json& j) {
    std::vector<Scalar> out;
    for (const auto& v : j)
        out.push_back(f.from_int(v.get<long long>()));
    return out;
}

Matrix parse_matrix(const Field& f, const json& j, size_t rows, size_t cols) {
    if (j.size() != rows)
        throw ValidationError("matrix has wrong row count");
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols)
            throw ValidationError("matrix has wrong column count");
        for (size_t k = 0; k < cols; ++k)
            m.at(i, k) = f.from_int(j[i][k].get<long long>());
    }
    return m;
}

AlgebraPtr parse_algebra(const Field& f, const json& j) {
    std::string kind = j.value("kind", "explicit");
    if (kind == "truncated_polynomial")
        return FinAlgebra::truncated_polynomial(f, j.at("n").get<size_t>());
    if (kind == "base_field")
        return FinAlgebra::base_field(f);
    size_t dim = j.at("dim").get<size_t>();
    std::vector<std::vector<std::vector<Scalar>>> mult;
    for (const auto& row : j.at("mult")) {
        std::vector<std::vector<Scalar>> r;
        for (const auto& cell : row)
            r.push_back(parse_element(f, cell));
        mult.push_back(std::move(r));
    }
    return std::make_shared<FinAlgebra>(f, dim, std::move(mult), parse_element(f, j.at("unit")));
}

FinModule parse_module(Store& st, const json& j) {
    AlgebraPtr a = st.algebras.at(j.at("algebra").get<std::string>());
    std::string kind = j.value("kind", "explicit");
    if (kind == "regular")
        return FinModule::regular(a);
    if (kind == "zero")
        return FinModule::zero(a);
    if (kind == "jordan") {
        size_t size = j.at("size").get<size_t>();
        Matrix n(st.field, size, size);
        for (size_t i = 0; i + 1 < size; ++i)
            n.at(i + 1, i) = st.field.one();
        std::vector<Matrix> act;
        Matrix power = Matrix::identity(st.field, size);
        for (size_t i = 0; i < a->dim(); ++i) {
            act.push_back(power);
            power = n * power;
        }
        return FinModule(a, size, std::move(act));
    }
    size_t dim = j.at("dim").get<size_t>();
    std::vector<Matrix> act;
    for (const auto& m : j.at("action"))
        act.push_back(parse_matrix(st.field, m, dim, dim));
    return FinModule(a, dim, std::move(act));
}

CdgRingPtr parse_ring(Store& st, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ring_as_dg")
        return CdgRing::ring_as_dg(st.algebras.at(j.at("base").get<std::string>()));
    AlgebraPtr s = st.algebras.at(j.at("base").get<std::string>());
    std::vector<Scalar> w = parse_element(st.field, j.at("w"));
    if (kind == "koszul")
        return CdgRing::koszul(s, w);
    if (kind == "curved_two_periodic")
        return CdgRing::curved_two_periodic(s, w);
    throw ValidationError("unknown ring kind " + kind);
}

MixedComplex parse_mixed(Store& st, const json& j) {
    if (j.contains("ring") && j.value("kind", "") == "regular")
        return cdg_to_mixed(CdgModule::regular(st.rings.at(j.at("ring").get<std::string>())));
    MixedComplex x;
    x.S = st.algebras.at(j.at("algebra").get<std::string>());
    x.w = parse_element(st.field, j.at("w"));
    for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it)
        x.comp.emplace(std::stoi(it.key()), st.modules.at(it.value().get<std::string>()));
    if (j.contains("d"))
        for (auto it = j.at("d").begin(); it != j.at("d").end(); ++it) {
            int k = std::stoi(it.key());
            x.d[k] = parse_matrix(st.field, it.value(), x.dim(k + 1), x.dim(k));
        }
    if (j.contains("s"))
        for (auto it = j.at("s").begin(); it != j.at("s").end(); ++it) {
            int k = std::stoi(it.key());
            x.s[k] = parse_matrix(st.field, it.value(), x.dim(k - 1), x.dim(k));
        }
    ValidationReport rep = check_mixed(x);
    if (!rep.valid())
        throw ValidationError("mixed complex invalid: " + rep.violations.front());
    return x;
}

Duplex parse_duplex(Store& st, const json& j) {
    Duplex d{st.algebras.at(j.at("algebra").get<std::string>()),
             parse_element(st.field, j.at("w")),
             st.modules.at(j.at("m0").get<std::string>()),
             st.modules.at(j.at("m1").get<std::string>()),
             Matrix(),
             Matrix()};
    d.f = parse_matrix(st.field, j.at("f"), d.m1.dim(), d.m0.dim());
    d.g = parse_matrix(st.field, j.at("g"), d.m0.dim(), d.m1.dim());
    ValidationReport rep = check_duplex(d);
    if (!rep.valid())
        throw ValidationError("duplex invalid: " + rep.violations.front());
    return d;
}

CdgModule parse_cdg(Store& st, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "regular")
        return CdgModule::regular(st.rings.at(j.at("ring").get<std::string>()));
    if (kind == "stalk")
        return CdgModule::stalk(st.rings.at(j.at("ring").get<std::string>()),
                                st.modules.at(j.at("module").get<std::string>()), j.value("degree", 0));
    if (kind == "from_mixed")
        return mixed_to_cdg(st.rings.at(j.at("ring").get<std::string>()),
                            st.mixed.at(j.at("mixed").get<std::string>()));
    if (kind == "suspend")
        return suspend(st.cdgs.at(j.at("of").get<std::string>()), j.at("n").get<int>());
    if (kind == "cone_id")
        return cone_id(st.cdgs.at(j.at("of").get<std::string>())).cone;
    if (kind == "direct_sum")
        return st.cdgs.at(j.at("left").get<std::string>())
            .direct_sum(st.cdgs.at(j.at("right").get<std::string>()));
    throw ValidationError("unknown cdg module kind " + kind);
}

struct Runner {
    Store st;
    ScenarioOptions opt;
    std::vector<Record> records;
    Rng rng{7};

    void emit(const std::string& id, bool pass, std::vector<long long> lhs = {},
              std::vector<long long> rhs = {}, bool witness = false) {
        records.push_back({id, pass, std::move(lhs), std::move(rhs), witness});
    }

    void expect_dim(const json& cmd, const std::string& id, size_t value) {
        std::vector<long long> lhs{static_cast<long long>(value)};
        if (cmd.contains("expect") && cmd.at("expect").contains("dim")) {
            long long want = cmd.at("expect").at("dim").get<long long>();
            emit(id, static_cast<long long>(value) == want, lhs, {want});
        } else {
            emit(id, true, lhs);
        }
    }

    void expect_bool(const json& cmd, const std::string& id, const std::string& key, bool value) {
        if (cmd.contains("expect") && cmd.at("expect").contains(key)) {
            bool want = cmd.at("expect").at(key).get<bool>();
            emit(id, value == want, {value}, {want});
        } else {
            emit(id, value, {value});
        }
    }

    std::string command_id(const json& cmd, size_t index) {
        if (cmd.contains("id"))
            return cmd.at("id").get<std::string>();
        return cmd.at("op").get<std::string>() + "#" + std::to_string(index);
    }

    void run_command(const json& cmd, size_t index) {
        std::string op = cmd.at("op").get<std::string>();
        std::string id = command_id(cmd, index);
        auto mod = [&](const char* key) -> const FinModule& {
            return st.modules.at(cmd.at(key).get<std::string>());
        };
        if (op == "hom_space") {
            expect_dim(cmd, id, hom_space(mod("m"), mod("n")).size());
        } else if (op == "ext1") {
            expect_dim(cmd, id, ext1(mod("m"), mod("n")).dim);
        } else if (op == "classify_module") {
            Classification c = classify_module(mod("m"));
            expect_bool(cmd, id + ".projective", "projective", c.projective);
            expect_bool(cmd, id + ".injective", "injective", c.injective);
        } else if (op == "stable_hom") {
            StableMode mode = cmd.value("mode", "projectives") == std::string("injectives")
                                  ? StableMode::Injectives
                                  : StableMode::Projectives;
            expect_dim(cmd, id, stable_hom(mod("m"), mod("n"), mode).dim);
        } else if (op == "projective_resolution") {
            ResolutionResult r = projective_resolution(mod("m"), cmd.value("max_steps", size_t(4)), rng);
            std::string verdict = r.verdict == ResolutionResult::Verdict::Finite
                                      ? "pd=" + std::to_string(r.pd)
                                      : (r.verdict == ResolutionResult::Verdict::Infinite ? "infinite"
                                                                                          : "unknown");
            bool pass = true;
            if (cmd.contains("expect") && cmd.at("expect").contains("verdict"))
                pass = verdict == cmd.at("expect").at("verdict").get<std::string>();
            emit(id, pass, {static_cast<long long>(r.steps.size())});
        } else if (op == "check_mixed") {
            expect_bool(cmd, id, "valid", check_mixed(st.mixed.at(cmd.at("x").get<std::string>())).valid());
        } else if (op == "check_duplex") {
            expect_bool(cmd, id, "valid",
                        check_duplex(st.duplexes.at(cmd.at("d").get<std::string>())).valid());
        } else if (op == "fold_check") {
            const MixedComplex& x = st.mixed.at(cmd.at("x").get<std::string>());
            Duplex d = fold(x, FoldMode::Product);
            bool same = fold(x, FoldMode::Sum).f == d.f;
            expect_bool(cmd, id, "valid", check_duplex(d).valid() && same);
        } else if (op == "sbar_laws") {
            const Duplex& d = st.duplexes.at(cmd.at("d").get<std::string>());
            CdgRingPtr ring = CdgRing::koszul(d.S, d.w);
            bool pass = true;
            try {
                TameComplex t = sbar(d, ring, std::max(4, -opt.window_lo));
                (void)t;
            } catch (const ValidationError&) {
                pass = false;
            }
            expect_bool(cmd, id, "valid", pass);
        } else if (op == "bar_acyclic") {
            const MixedComplex& x = st.mixed.at(cmd.at("x").get<std::string>());
            int lo = cmd.value("lo", opt.window_lo), hi = cmd.value("hi", opt.window_hi);
            if (lo >= hi)
                throw ValidationError("bar_acyclic: window insufficient");
            size_t depth = cmd.value("depth", static_cast<size_t>(hi - lo + 2));
            AcyclicityVerdict v = bar_acyclic_on(bar_complex(x, depth), lo, hi);
            expect_bool(cmd, id, "acyclic", v.acyclic);
        } else if (op == "completed_bar_crosscheck") {
            const MixedComplex& x = st.mixed.at(cmd.at("x").get<std::string>());
            CdgRingPtr ring = CdgRing::koszul(x.S, x.w);
            CompletedBarCrossCheck r = completed_bar_crosscheck(x, ring, BarSignConvention::Quoted);
            expect_bool(cmd, id, "equal", r.equal);
        } else if (op == "counit_factorization") {
            const MixedComplex& x = st.mixed.at(cmd.at("x").get<std::string>());
            CdgRingPtr ring = CdgRing::koszul(x.S, x.w);
            expect_bool(cmd, id, "holds", counit_factorization_check(x, ring));
        } else if (op == "alpha_epi") {
            const MixedComplex& x = st.mixed.at(cmd.at("x").get<std::string>());
            CdgRingPtr ring = CdgRing::koszul(x.S, x.w);
            AlphaData a = alpha_epi(x, ring);
            expect_bool(cmd, id + ".morphism", "morphism", a.alpha_is_morphism);
            expect_bool(cmd, id + ".surjective", "surjective", a.alpha_surjective);
        } else if (op == "filtration_check") {
            const MixedComplex& x = st.mixed.at(cmd.at("x").get<std::string>());
            CdgRingPtr ring = CdgRing::koszul(x.S, x.w);
            size_t depth = cmd.value("depth", size_t(3));
            bool all = true;
            for (size_t i = 0; i < depth; ++i)
                all = all && filtration_quotient_check(x, ring, i, rng).isomorphic;
            emit(id, all, {}, {}, all);
        } else if (op == "gorenstein_membership") {
            GorensteinResult g = gorenstein_membership(mod("m"), cmd.value("bound", size_t(3)), rng);
            auto tri = [](TriVerdict v) {
                return v == TriVerdict::Yes ? "yes" : (v == TriVerdict::No ? "no" : "undecided");
            };
            bool pass = true;
            if (cmd.contains("expect")) {
                const json& e = cmd.at("expect");
                if (e.contains("gorenstein_projective"))
                    pass = pass && e.at("gorenstein_projective").get<std::string>() ==
                                       tri(g.gorenstein_projective);
                if (e.contains("finite_pd"))
                    pass = pass && e.at("finite_pd").get<std::string>() == tri(g.finite_pd);
                if (e.contains("pd"))
                    pass = pass && g.finite_pd == TriVerdict::Yes && g.pd == e.at("pd").get<size_t>();
            }
            emit(id, pass, {}, {}, !g.witness_comp.empty());
        } else if (op == "orthogonal_membership") {
            std::vector<FinModule> list;
            for (const auto& name : cmd.at("list"))
                list.push_back(st.modules.at(name.get<std::string>()));
            OrthSide side = cmd.value("side", "right") == std::string("left") ? OrthSide::Left
                                                                              : OrthSide::Right;
            expect_bool(cmd, id, "member", orthogonal_membership(list, mod("x"), side).member);
        } else if (op == "path_object") {
            const FinModule& y = mod("y");
            const FinModule& i = mod("i");
            Matrix cover = parse_matrix(st.field, cmd.at("cover"), y.dim(), i.dim());
            PathObjectData p = path_object(y, i, cover);
            expect_dim(cmd, id, p.py.dim());
        } else if (op == "homotopy_classes") {
            const CdgModule& x = st.cdgs.at(cmd.at("x").get<std::string>());
            const CdgModule& y = st.cdgs.at(cmd.at("y").get<std::string>());
            expect_dim(cmd, id, homotopy_classes(x, y, cmd.value("k", 0)).dim);
        } else if (op == "is_contractible") {
            expect_bool(cmd, id, "contractible",
                        is_contractible(st.cdgs.at(cmd.at("x").get<std::string>())).contractible);
        } else if (op == "is_cdg_projective") {
            expect_bool(cmd, id, "projective",
                        is_cdg_projective(st.cdgs.at(cmd.at("x").get<std::string>())));
        } else if (op == "dg_hom_d2") {
            const CdgModule& x = st.cdgs.at(cmd.at("x").get<std::string>());
            const CdgModule& y = st.cdgs.at(cmd.at("y").get<std::string>());
            DgHom dh = dg_hom(x, y);
            bool zero = true;
            for (auto& [k, m] : dh.complex.d)
                if (!(dh.complex.diff(k + 1) * m).is_zero())
                    zero = false;
            expect_bool(cmd, id, "d2_zero", zero);
        } else if (op == "suspend_composition") {
            const CdgModule& x = st.cdgs.at(cmd.at("x").get<std::string>());
            bool ok = true;
            for (int m = -2; m <= 2; ++m)
                for (int n = -2; n <= 2; ++n)
                    if (!(suspend(suspend(x, m), n) == suspend(x, m + n)))
                        ok = false;
            expect_bool(cmd, id, "holds", ok);
        } else if (op == "module_cohomology_zero") {
            const CdgModule& x = st.cdgs.at(cmd.at("x").get<std::string>());
            bool zero = true;
            for (auto& [k, d] : module_cohomology_dims(x))
                if (d)
                    zero = false;
            expect_bool(cmd, id, "acyclic", zero);
        } else if (op == "validate_cdg") {
            expect_bool(cmd, id, "valid",
                        validate_cdg_module(st.cdgs.at(cmd.at("x").get<std::string>())).valid());
        } else if (op == "mixed_model_class") {
            MixedModelClassResult r = mixed_model_class_test(st.mixed.at(cmd.at("x").get<std::string>()));
            expect_bool(cmd, id + ".cofibrant", "cofibrant", r.ctr_sing_cofibrant);
            expect_bool(cmd, id + ".fibrant_abs", "fibrant_abs", r.ctr_sing_fibrant_abs);
        } else if (op == "window_eval_dims") {
            const Duplex& d = st.duplexes.at(cmd.at("d").get<std::string>());
            CdgRingPtr ring = CdgRing::koszul(d.S, d.w);
            TameComplex t = sbar(d, ring, 4);
            Fragment f = window_eval(t, cmd.value("lo", -2), cmd.value("hi", 2));
            std::vector<long long> dims;
            for (auto& m : f.comp)
                dims.push_back(static_cast<long long>(m.dim()));
            bool pass = true;
            if (cmd.contains("expect") && cmd.at("expect").contains("dims")) {
                std::vector<long long> want;
                for (const auto& v : cmd.at("expect").at("dims"))
                    want.push_back(v.get<long long>());
                pass = dims == want;
            }
            emit(id, pass, dims);
        } else {
            throw ValidationError("unknown command op " + op);
        }
    }
};

}  // namespace

ScenarioResult run_scenario_text(const std::string& text, const ScenarioOptions& opt) {
    ScenarioResult out;
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        out.exit_code = 2;
        out.error = std::string("parse error: ") + e.what();
        return out;
    }
    Runner r;
    r.opt = opt;
    r.rng = Rng(opt.seed);
    try {
        long long p = opt.field_override ? *opt.field_override : j.value("field", 3LL);
        r.st.field = Field(p);
        if (j.contains("algebras"))
            for (auto it = j.at("algebras").begin(); it != j.at("algebras").end(); ++it)
                r.st.algebras.emplace(it.key(), parse_algebra(r.st.field, it.value()));
        if (j.contains("modules"))
            for (auto it = j.at("modules").begin(); it != j.at("modules").end(); ++it)
                r.st.modules.emplace(it.key(), parse_module(r.st, it.value()));
        if (j.contains("rings"))
            for (auto it = j.at("rings").begin(); it != j.at("rings").end(); ++it)
                r.st.rings.emplace(it.key(), parse_ring(r.st, it.value()));
        if (j.contains("mixed"))
            for (auto it = j.at("mixed").begin(); it != j.at("mixed").end(); ++it)
                r.st.mixed.emplace(it.key(), parse_mixed(r.st, it.value()));
        if (j.contains("duplexes"))
            for (auto it = j.at("duplexes").begin(); it != j.at("duplexes").end(); ++it)
                r.st.duplexes.emplace(it.key(), parse_duplex(r.st, it.value()));
        if (j.contains("cdg"))
            for (auto it = j.at("cdg").begin(); it != j.at("cdg").end(); ++it)
                r.st.cdgs.emplace(it.key(), parse_cdg(r.st, it.value()));
    } catch (const json::exception& e) {
        out.exit_code = 2;
        out.error = std::string("parse error: ") + e.what();
        return out;
    } catch (const std::exception& e) {
        out.exit_code = 3;
        out.error = std::string("validation error: ") + e.what();
        return out;
    }
    try {
        size_t index = 0;
        if (j.contains("commands"))
            for (const auto& cmd : j.at("commands")) {
                ++index;
                if (!opt.only_tag.empty() && cmd.value("tag", "") != opt.only_tag)
                    continue;
                r.run_command(cmd, index);
            }
    } catch (const json::exception& e) {
        out.exit_code = 2;
        out.error = std::string("parse error: ") + e.what();
        out.records = std::move(r.records);
        return out;
    } catch (const std::exception& e) {
        out.exit_code = 3;
        out.error = std::string("validation error: ") + e.what();
        out.records = std::move(r.records);
        return out;
    }
    out.records = std::move(r.records);
    for (const Record& rec : out.records)
        if (!rec.pass)
            out.exit_code = 1;
    return out;
}

ScenarioResult run_scenario_file(const std::string& path, const ScenarioOptions& opt) {
    std::ifstream in(path);
    if (!in) {
        ScenarioResult out;
        out.exit_code = 2;
        out.error = "cannot open " + path;
        return out;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return run_scenario_text(ss.str(), opt);
}

std::string records_to_json(const std::vector<Record>& records, uint64_t seed) {
    std::ostringstream os;
    os << "{\n  \"seed\": " << seed << ",\n  \"records\": [\n";
    for (size_t i = 0; i < records.size(); ++i) {
        const Record& r = records[i];
        os << "    {\"id\": \"" << r.id << "\", \"status\": \"" << (r.pass ? "pass" : "fail")
           << "\", \"lhs-dims\": [";
        for (size_t k = 0; k < r.lhs_dims.size(); ++k)
            os << (k ? "," : "") << r.lhs_dims[k];
        os << "], \"rhs-dims\": [";
        for (size_t k = 0; k < r.rhs_dims.size(); ++k)
            os << (k ? "," : "") << r.rhs_dims[k];
        os << "], \"witness-present\": " << (r.witness ? "true" : "false") << "}"
           << (i + 1 < records.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

}  // namespace cdgforge
