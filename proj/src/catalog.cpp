#include "leibniz/catalog.hpp"

#include <initializer_list>
#include <set>

namespace leibniz {

namespace {

Scalar operator*(long k, const Scalar& s) { return Scalar::from_int(s.field(), k) * s; }

// Parameter values for one generator of a family: one parameter is 1, the rest 0.
class OneHot {
public:
    OneHot(const FieldSpec& f, std::string active) : f_(f), active_(std::move(active)) {}

    Scalar operator[](std::string_view name) const { return Scalar::from_int(f_, name == active_ ? 1 : 0); }
    Scalar zero() const { return Scalar::zero(f_); }
    const FieldSpec& field() const { return f_; }

private:
    FieldSpec f_;
    std::string active_;
};

using Rows = std::initializer_list<std::initializer_list<Scalar>>;

Matrix mat(const FieldSpec& f, Rows rows) {
    std::vector<Vector> v;
    for (const auto& r : rows) v.emplace_back(r);
    return Matrix::from_rows(f, v);
}

template <class Make>
std::vector<NamedPair> pair_family(const FieldSpec& f, const std::vector<std::string>& params, Make make) {
    std::vector<NamedPair> out;
    for (const auto& p : params) out.push_back({p, make(OneHot(f, p))});
    return out;
}

template <class Make>
std::vector<NamedMatrix> matrix_family(const FieldSpec& f, const std::vector<std::string>& params, Make make) {
    std::vector<NamedMatrix> out;
    for (const auto& p : params) out.push_back({p, make(OneHot(f, p))});
    return out;
}

// Triples (i, j, coefficients of [e_i, e_j]) with 1-based indices.
struct Br {
    std::size_t i, j;
    std::vector<Scalar> value;
};

LeibnizAlgebra make_algebra(const FieldSpec& f, std::size_t n, const std::vector<Br>& brackets,
                            std::vector<std::string> names = {}) {
    std::vector<BracketEntry> table;
    for (const auto& b : brackets) table.push_back({b.i - 1, b.j - 1, Vector(b.value.begin(), b.value.end())});
    return LeibnizAlgebra::build(f, n, table, std::move(names));
}

Scalar alpha_of(const ParamMap& params) { return params.at("alpha"); }

std::vector<ParameterSpec> alpha_param() { return {{"alpha", "nonzero"}}; }

ExpectedDims dims(std::size_t der, std::size_t bider) {
    ExpectedDims e;
    e.der_dim = der;
    e.bider_dim = bider;
    return e;
}

// Published families whose D part is zero except for a and b at the top of
// the last column.
std::vector<NamedPair> last_column_family(const FieldSpec& f, std::vector<std::string> params,
                                          const std::function<Matrix(const OneHot&)>& d_of) {
    return pair_family(f, params, [&](const OneHot& v) {
        const auto o = v.zero();
        return BiderPair{d_of(v), mat(f, {{o, o, v["a"]}, {o, o, v["b"]}, {o, o, o}})};
    });
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    auto k = [](const FieldSpec& f, long x) { return Scalar::from_int(f, x); };

    {
        CatalogEntry e;
        e.id = "dim2.L1";
        e.dim = 2;
        e.brackets = "[e2,e2]=e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            return make_algebra(f, 2, {{2, 2, {k(f, 1), k(f, 0)}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) {
            auto d = dims(2, 3);
            d.antider_dim = 2;
            d.inner_dim = 1;
            return d;
        };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"a", "b", "x"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return BiderPair{mat(f, {{2 * v["a"], v["b"]}, {o, v["a"]}}), mat(f, {{o, v["x"]}, {o, v["a"]}})};
            });
            fam.der = matrix_family(f, {"a", "b"}, [&](const OneHot& v) {
                return mat(f, {{2 * v["a"], v["b"]}, {v.zero(), v["a"]}});
            });
            fam.antider = matrix_family(f, {"x", "y"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return mat(f, {{o, v["x"]}, {o, v["y"]}});
            });
            fam.inner = pair_family(f, {"b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return BiderPair{mat(f, {{o, v["b"]}, {o, o}}), mat(f, {{o, -v["b"]}, {o, o}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim2.L2";
        e.dim = 2;
        e.brackets = "[e1,e2]=[e2,e2]=e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            return make_algebra(f, 2, {{1, 2, {k(f, 1), k(f, 0)}}, {2, 2, {k(f, 1), k(f, 0)}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) {
            auto d = dims(1, 2);
            d.antider_dim = 2;
            d.inner_dim = 2;
            d.all_inner = true;
            return d;
        };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"a", "x"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return BiderPair{mat(f, {{v["a"], v["a"]}, {o, o}}), mat(f, {{o, v["x"]}, {o, o}})};
            });
            fam.der = matrix_family(f, {"a"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return mat(f, {{v["a"], v["a"]}, {o, o}});
            });
            fam.antider = matrix_family(f, {"x", "y"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return mat(f, {{o, v["x"]}, {o, v["y"]}});
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }

    // Three-dimensional algebras. Bider families are transcribed as published.
    {
        CatalogEntry e;
        e.id = "dim3.L1";
        e.dim = 3;
        e.brackets = "[e1,e3]=-2e1, [e2,e2]=e1, [e3,e2]=-[e2,e3]=e2";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3,
                                {{1, 3, {k(f, -2), o, o}}, {2, 2, {one, o, o}}, {3, 2, {o, one, o}}, {2, 3, {o, -one, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(2, 3); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"x", "y", "a"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"], y = v["y"];
                return BiderPair{mat(f, {{2 * x, y, o}, {o, x, y}, {o, o, o}}),
                                 mat(f, {{o, -y, v["a"]}, {o, x, y}, {o, o, o}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L2";
        e.dim = 3;
        e.parameters = alpha_param();
        e.brackets = "[e1,e3]=alpha e1, [e3,e2]=-[e2,e3]=e2";
        e.build = [k](const FieldSpec& f, const ParamMap& p) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{1, 3, {alpha_of(p), o, o}}, {3, 2, {o, one, o}}, {2, 3, {o, -one, o}}});
        };
        e.expected = [](const FieldSpec& f, const ParamMap& p) {
            const bool minus_one = alpha_of(p) == Scalar::from_int(f, -1);
            auto d = dims(3, minus_one ? 4 : 5);
            d.branch = minus_one ? "alpha = -1" : "alpha != -1";
            return d;
        };
        e.families = [](const FieldSpec& f, const ParamMap& p) {
            const bool minus_one = alpha_of(p) == Scalar::from_int(f, -1);
            PublishedFamilies fam;
            std::vector<std::string> params = {"x", "y", "z", "a", "b"};
            if (minus_one) params = {"x", "y", "z", "b"};
            fam.bider = pair_family(f, params, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto y = v["y"], z = v["z"];
                return BiderPair{mat(f, {{v["x"], o, o}, {o, y, z}, {o, o, o}}),
                                 mat(f, {{o, v["a"], v["b"]}, {o, y, z}, {o, o, o}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L3";
        e.dim = 3;
        e.brackets = "[e3,e2]=-[e2,e3]=e2, [e3,e3]=-e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{3, 2, {o, one, o}}, {2, 3, {o, -one, o}}, {3, 3, {-one, o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(3, 4); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"x", "y", "z", "a"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"], z = v["z"];
                return BiderPair{mat(f, {{o, o, v["y"]}, {o, x, z}, {o, o, o}}),
                                 mat(f, {{o, o, v["a"]}, {o, x, z}, {o, o, o}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L4";
        e.dim = 3;
        e.brackets = "[e2,e2]=e1, [e3,e3]=e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{2, 2, {one, o, o}}, {3, 3, {one, o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(3, 5); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"x", "y", "z", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"];
                return BiderPair{mat(f, {{2 * x, v["y"], v["z"]}, {o, x, o}, {o, o, x}}),
                                 mat(f, {{o, v["a"], v["b"]}, {o, x, o}, {o, o, x}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L5";
        e.dim = 3;
        e.brackets = "[e2,e2]=e1, [e3,e3]=-e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{2, 2, {one, o, o}}, {3, 3, {-one, o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(4, 6); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"x", "y", "z", "t", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"], z = v["z"];
                return BiderPair{mat(f, {{2 * x, v["y"], v["t"]}, {o, x, -z}, {o, z, x}}),
                                 mat(f, {{o, v["a"], v["b"]}, {o, x, -z}, {o, z, x}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L7";
        e.dim = 3;
        e.parameters = alpha_param();
        e.brackets = "[e2,e2]=[e2,e3]=e1, [e3,e3]=alpha e1";
        e.build = [k](const FieldSpec& f, const ParamMap& p) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{2, 2, {one, o, o}}, {2, 3, {one, o, o}}, {3, 3, {alpha_of(p), o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(3, 5); };
        e.families = [](const FieldSpec& f, const ParamMap& p) {
            const auto alpha = alpha_of(p);
            const auto two = Scalar::from_int(f, 2);
            const auto gamma = (4 * alpha - Scalar::one(f)) / (two * alpha);
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"x", "y", "z", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"];
                const auto r2 = Vector{o, x, x / two};
                const auto r3 = Vector{o, -(x / (two * alpha)), (gamma - Scalar::one(f)) * x};
                return BiderPair{Matrix::from_rows(f, {{gamma * x, v["y"], v["z"]}, r2, r3}),
                                 Matrix::from_rows(f, {{o, v["a"], v["b"]}, r2, r3})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L8";
        e.dim = 3;
        e.brackets = "[e2,e3]=e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0);
            return make_algebra(f, 3, {{2, 3, {k(f, 1), o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(4, 5); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"x", "y", "z", "t", "a"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"], y = v["y"], z = v["z"], t = v["t"];
                return BiderPair{mat(f, {{x + y, z, t}, {o, x, o}, {o, o, y}}),
                                 mat(f, {{o, z, t}, {o, o, v["a"]}, {o, o, y}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L9";
        e.dim = 3;
        e.brackets = "[e1,e3]=e2, [e2,e3]=e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{1, 3, {o, one, o}}, {2, 3, {one, o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(2, 4); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = last_column_family(f, {"x", "y", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return mat(f, {{v["x"], v["y"], o}, {v["y"], v["x"], o}, {o, o, o}});
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L10";
        e.dim = 3;
        e.brackets = "[e1,e3]=e2, [e2,e3]=-e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{1, 3, {o, one, o}}, {2, 3, {-one, o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(2, 4); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = last_column_family(f, {"x", "y", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return mat(f, {{v["x"], -v["y"], o}, {v["y"], v["x"], o}, {o, o, o}});
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L12";
        e.dim = 3;
        e.parameters = alpha_param();
        e.brackets = "[e1,e3]=e2, [e2,e3]=alpha e1+e2";
        e.build = [k](const FieldSpec& f, const ParamMap& p) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{1, 3, {o, one, o}}, {2, 3, {alpha_of(p), one, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(2, 4); };
        e.families = [](const FieldSpec& f, const ParamMap& p) {
            const auto alpha = alpha_of(p);
            PublishedFamilies fam;
            fam.bider = last_column_family(f, {"x", "y", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"], y = v["y"];
                return mat(f, {{x, alpha * y, o}, {y, x + y, o}, {o, o, o}});
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L13";
        e.dim = 3;
        e.brackets = "[e1,e3]=e1, [e2,e3]=e2";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{1, 3, {one, o, o}}, {2, 3, {o, one, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(2, 4); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = last_column_family(f, {"x", "y", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                return mat(f, {{v["x"], o, o}, {o, v["y"], o}, {o, o, o}});
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L14";
        e.dim = 3;
        e.brackets = "[e1,e3]=e2, [e3,e3]=e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{1, 3, {o, one, o}}, {3, 3, {one, o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(3, 5); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = pair_family(f, {"x", "y", "z", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"], y = v["y"];
                return BiderPair{mat(f, {{2 * x, o, y}, {y, 3 * x, v["z"]}, {o, o, x}}),
                                 mat(f, {{o, o, v["a"]}, {o, o, v["b"]}, {o, o, x}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.id = "dim3.L15";
        e.dim = 3;
        e.brackets = "[e1,e3]=e1+e2, [e3,e3]=e1";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(f, 3, {{1, 3, {one, one, o}}, {3, 3, {one, o, o}}});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) { return dims(2, 4); };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            PublishedFamilies fam;
            fam.bider = last_column_family(f, {"x", "y", "a", "b"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"];
                return mat(f, {{x, o, x}, {x, o, v["y"]}, {o, o, o}});
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }

    {
        CatalogEntry e;
        e.id = "dim4.d1";
        e.dim = 4;
        e.brackets = "[e1,e3]=[e2,e3]=-[e3,e1]=[e3,e2]=z";
        e.build = [k](const FieldSpec& f, const ParamMap&) {
            const auto o = k(f, 0), one = k(f, 1);
            return make_algebra(
                f, 4,
                {{1, 3, {o, o, o, one}}, {2, 3, {o, o, o, one}}, {3, 1, {o, o, o, -one}}, {3, 2, {o, o, o, one}}},
                {"e1", "e2", "e3", "z"});
        };
        e.expected = [](const FieldSpec&, const ParamMap&) {
            auto d = dims(6, 10);
            d.antider_dim = 9;
            d.inner_dim = 3;
            return d;
        };
        e.families = [](const FieldSpec& f, const ParamMap&) {
            const auto half = Scalar::one(f) / Scalar::from_int(f, 2);
            PublishedFamilies fam;
            fam.bider = pair_family(
                f, {"x", "y", "alpha", "beta", "a1", "a2", "a3", "A1", "A2", "A3"}, [&](const OneHot& v) {
                    const auto o = v.zero();
                    const auto x = v["x"], y = v["y"], al = v["alpha"], be = v["beta"];
                    return BiderPair{
                        mat(f, {{x, o, al, o}, {o, x, o, o}, {o, o, y, o}, {v["a1"], v["a2"], v["a3"], x + y}}),
                        mat(f, {{half * (y + x), half * (y - x), al + be, o},
                                {half * (y - x), half * (y + x), be, o},
                                {o, o, y, o},
                                {v["A1"], v["A2"], v["A3"], o}})};
                });
            fam.der = matrix_family(f, {"x", "y", "alpha", "a1", "a2", "a3"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto x = v["x"], y = v["y"];
                return mat(f, {{x, o, v["alpha"], o}, {o, x, o, o}, {o, o, y, o}, {v["a1"], v["a2"], v["a3"], x + y}});
            });
            fam.antider = matrix_family(
                f, {"a11", "a12", "a13", "a21", "a23", "a31", "A1", "A2", "A3"}, [&](const OneHot& v) {
                    const auto o = v.zero();
                    const auto a11 = v["a11"], a12 = v["a12"], a21 = v["a21"], a31 = v["a31"];
                    return mat(f, {{a11, a12, v["a13"], o},
                                   {a21, a11 + a21 - a12, v["a23"], o},
                                   {a31, -a31, a11 + a21, o},
                                   {v["A1"], v["A2"], v["A3"], o}});
                });
            fam.inner = pair_family(f, {"a1", "a3", "A3"}, [&](const OneHot& v) {
                const auto o = v.zero();
                const auto a1 = v["a1"];
                return BiderPair{mat(f, {{o, o, o, o}, {o, o, o, o}, {o, o, o, o}, {a1, a1, v["a3"], o}}),
                                 mat(f, {{o, o, o, o}, {o, o, o, o}, {o, o, o, o}, {a1, -a1, v["A3"], o}})};
            });
            return fam;
        };
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& list_entries() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& find_entry(std::string_view id) {
    if (id == "dim3.L6") throw CatalogError("dim3.L6(alpha) is isomorphic to dim3.L4; load dim3.L4 instead");
    if (id == "dim3.L11") throw CatalogError("dim3.L11(alpha) is isomorphic to dim3.L9; load dim3.L9 instead");
    for (const auto& e : list_entries())
        if (e.id == id) return e;
    throw CatalogError("unknown catalog id '" + std::string(id) + "'");
}

ParamMap parse_params(const std::vector<std::string>& assignments, const FieldSpec& field) {
    ParamMap out;
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0) throw CatalogError("parameter '" + a + "' must read name=value");
        const auto name = a.substr(0, eq);
        if (out.count(name)) throw CatalogError("parameter '" + name + "' given twice");
        try {
            out.emplace(name, Scalar::parse(a.substr(eq + 1), field));
        } catch (const Error& e) {
            throw CatalogError("parameter '" + name + "': " + e.what());
        }
    }
    return out;
}

void validate_params(const CatalogEntry& entry, const FieldSpec&, const ParamMap& params) {
    std::set<std::string> declared;
    for (const auto& p : entry.parameters) {
        declared.insert(p.name);
        auto it = params.find(p.name);
        if (it == params.end()) throw CatalogError(entry.id + " requires parameter '" + p.name + "'");
        if (it->second.is_zero()) throw CatalogError(entry.id + ": parameter '" + p.name + "' must be nonzero");
    }
    for (const auto& [name, value] : params)
        if (!declared.count(name)) throw CatalogError(entry.id + " has no parameter '" + name + "'");
}

LeibnizAlgebra load(std::string_view id, const FieldSpec& field, const ParamMap& params) {
    const auto& entry = find_entry(id);
    validate_params(entry, field, params);
    for (const auto& [name, value] : params)
        if (!(value.field() == field)) throw CatalogError("parameter '" + name + "' is over the wrong field");
    return entry.build(field, params);
}

}  // namespace leibniz
