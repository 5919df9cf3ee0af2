// Copyright 2026 The dwspots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "dws/convex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace dws
{
namespace
{
double cross2(const Vec& o, const Vec& a, const Vec& b)
{
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double point_scale(const std::vector<Vec>& pts)
{
    double s = 0.0;
    for (const Vec& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
    return std::max(s, 1.0);
}

std::vector<Vec> monotone_chain(std::vector<Vec> pts, double eps)
{
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    std::vector<Vec> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Vec& p : pts) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], p) <= eps) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 1 ? k - 1 : k);
    return hull;
}

struct Face
{
    std::array<int, 3> v;
    Vec normal;
    double offset;
    bool alive;
};

Face make_face(const std::vector<Vec>& P, int a, int b, int c)
{
    Vec nrm = (P[b] - P[a]).cross(P[c] - P[a]);
    nrm.normalize();
    return {{a, b, c}, nrm, nrm.dot(P[a]), true};
}

// Incremental hull; returns triangles indexing into P.
std::vector<std::array<int, 3>> incremental_hull(const std::vector<Vec>& P, double eps)
{
    const int N = int(P.size());
    int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
    double best = 0.0;
    for (int i = 0; i < N; ++i) {
        const double d = (P[i] - P[i0]).norm();
        if (d > best) best = d, i1 = i;
    }
    require(i1 >= 0 && best > eps, "three-dimensional hull of coincident points");
    best = 0.0;
    const Vec axis = (P[i1] - P[i0]).normalized();
    for (int i = 0; i < N; ++i) {
        const Vec d = P[i] - P[i0];
        const double off = (d - d.dot(axis) * axis).norm();
        if (off > best) best = off, i2 = i;
    }
    require(i2 >= 0 && best > eps, "three-dimensional hull of collinear points");
    best = 0.0;
    const Vec pn = (P[i1] - P[i0]).cross(P[i2] - P[i0]).normalized();
    for (int i = 0; i < N; ++i) {
        const double off = std::abs((P[i] - P[i0]).dot(pn));
        if (off > best) best = off, i3 = i;
    }
    require(i3 >= 0 && best > eps, "three-dimensional hull of coplanar points");

    std::vector<Face> faces;
    const Vec inner = 0.25 * (P[i0] + P[i1] + P[i2] + P[i3]);
    auto add = [&](int a, int b, int c) {
        Face f = make_face(P, a, b, c);
        if (f.normal.dot(inner) > f.offset) {
            std::swap(f.v[1], f.v[2]);
            f.normal = -f.normal;
            f.offset = -f.offset;
        }
        faces.push_back(f);
    };
    add(i0, i1, i2);
    add(i0, i1, i3);
    add(i0, i2, i3);
    add(i1, i2, i3);

    std::map<std::pair<int, int>, int> edge_face;
    auto register_face = [&](int id) {
        const auto& v = faces[id].v;
        for (int e = 0; e < 3; ++e) edge_face[{v[e], v[(e + 1) % 3]}] = id;
    };
    for (int id = 0; id < 4; ++id) register_face(id);

    std::vector<int> visible;
    for (int p = 0; p < N; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        visible.clear();
        for (int id = 0; id < int(faces.size()); ++id)
            if (faces[id].alive && faces[id].normal.dot(P[p]) - faces[id].offset > eps) visible.push_back(id);
        if (visible.empty()) continue;
        for (int id : visible) faces[id].alive = false;
        std::vector<std::pair<int, int>> horizon;
        for (int id : visible) {
            const auto& v = faces[id].v;
            for (int e = 0; e < 3; ++e) {
                const int a = v[e], b = v[(e + 1) % 3];
                const auto it = edge_face.find({b, a});
                if (it != edge_face.end() && faces[it->second].alive) horizon.emplace_back(a, b);
            }
        }
        for (int id : visible) {
            const auto& v = faces[id].v;
            for (int e = 0; e < 3; ++e) {
                const auto it = edge_face.find({v[e], v[(e + 1) % 3]});
                if (it != edge_face.end() && it->second == id) edge_face.erase(it);
            }
        }
        for (const auto& [a, b] : horizon) {
            faces.push_back(make_face(P, a, b, p));
            register_face(int(faces.size()) - 1);
        }
    }
    std::vector<std::array<int, 3>> out;
    for (const Face& f : faces)
        if (f.alive) out.push_back(f.v);
    return out;
}

Vec closest_on_segment(const Vec& x, const Vec& a, const Vec& b)
{
    const Vec ab = b - a;
    const double len2 = ab.squaredNorm();
    const double s = len2 > 0.0 ? std::clamp((x - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    return a + s * ab;
}

// Closest point on triangle abc (Ericson, Real-Time Collision Detection 5.1.5).
Vec closest_on_triangle(const Vec& p, const Vec& a, const Vec& b, const Vec& c)
{
    const Vec ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;
    const Vec bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return b;
    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) return a + d1 / (d1 - d3) * ab;
    const Vec cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return c;
    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) return a + d2 / (d2 - d6) * ac;
    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0)
        return b + (d4 - d3) / ((d4 - d3) + (d5 - d6)) * (c - b);
    const double denom = 1.0 / (va + vb + vc);
    return a + ab * (vb * denom) + ac * (vc * denom);
}

}  // namespace

ConvexPolytope ConvexPolytope::hull_of(int n, const std::vector<Vec>& points)
{
    check_dimension(n);
    require(!points.empty(), "hull of an empty point set");
    ConvexPolytope K;
    K.n_ = n;
    std::vector<Vec> pts;
    pts.reserve(points.size());
    for (const Vec& p : points) pts.push_back(truncate(p, n));
    const double eps = 1e-12 * point_scale(pts);

    if (n == 1) {
        double lo = pts[0].x(), hi = pts[0].x();
        for (const Vec& p : pts) lo = std::min(lo, p.x()), hi = std::max(hi, p.x());
        require(hi - lo > eps, "one-dimensional hull has empty interior");
        K.vertices_ = {Vec(lo, 0, 0), Vec(hi, 0, 0)};
        K.facet_normals_ = {Vec(-1, 0, 0), Vec(1, 0, 0)};
        K.facet_offsets_ = {-lo, hi};
        return K;
    }
    if (n == 2) {
        K.vertices_ = monotone_chain(pts, eps * point_scale(pts));
        require(K.vertices_.size() >= 3, "two-dimensional hull has empty interior");
        const std::size_t m = K.vertices_.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec& a = K.vertices_[i];
            const Vec& b = K.vertices_[(i + 1) % m];
            const Vec nrm = Vec(b.y() - a.y(), a.x() - b.x(), 0.0).normalized();
            K.facet_normals_.push_back(nrm);
            K.facet_offsets_.push_back(nrm.dot(a));
        }
        return K;
    }
    const auto tri = incremental_hull(pts, 1e-10 * point_scale(pts));
    std::map<int, int> remap;
    for (const auto& f : tri)
        for (int v : f)
            if (!remap.count(v)) remap[v] = 0;
    int next = 0;
    for (auto& [old, fresh] : remap) {
        fresh = next++;
        K.vertices_.push_back(pts[old]);
    }
    for (const auto& f : tri) {
        const std::array<int, 3> g{remap[f[0]], remap[f[1]], remap[f[2]]};
        K.faces_.push_back(g);
        const Vec& a = K.vertices_[g[0]];
        const Vec nrm = (K.vertices_[g[1]] - a).cross(K.vertices_[g[2]] - a).normalized();
        K.facet_normals_.push_back(nrm);
        K.facet_offsets_.push_back(nrm.dot(a));
    }
    return K;
}

bool ConvexPolytope::contains(const Vec& x, double tol) const
{
    const Vec y = truncate(x, n_);
    for (std::size_t i = 0; i < facet_normals_.size(); ++i)
        if (facet_normals_[i].dot(y) > facet_offsets_[i] + tol) return false;
    return true;
}

double ConvexPolytope::support(const Vec& nu, int* index) const
{
    double best = -std::numeric_limits<double>::infinity();
    int arg = -1;
    for (int i = 0; i < int(vertices_.size()); ++i) {
        const double h = vertices_[i].dot(nu);
        if (h > best) best = h, arg = i;
    }
    if (index) *index = arg;
    return best;
}

double ConvexPolytope::diameter() const
{
    double d = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j) d = std::max(d, (vertices_[i] - vertices_[j]).norm());
    return d;
}

Vec ConvexPolytope::vertex_centroid() const
{
    Vec c = Vec::Zero();
    for (const Vec& v : vertices_) c += v;
    return c / double(vertices_.size());
}

HullProjection distance_to_hull(const ConvexPolytope& K, const Vec& x)
{
    const int n = K.dimension();
    const Vec y = truncate(x, n);
    HullProjection out;
    if (K.contains(y)) {
        out.xi = y;
        return out;
    }
    const auto& V = K.vertices();
    double best = std::numeric_limits<double>::infinity();
    Vec xi = V.front();
    auto consider = [&](const Vec& p) {
        const double d = (y - p).squaredNorm();
        if (d < best) best = d, xi = p;
    };
    if (n == 1) {
        consider(y.x() < V[0].x() ? V[0] : V[1]);
    } else if (n == 2) {
        for (std::size_t i = 0; i < V.size(); ++i) consider(closest_on_segment(y, V[i], V[(i + 1) % V.size()]));
    } else {
        for (const auto& f : K.faces()) consider(closest_on_triangle(y, V[f[0]], V[f[1]], V[f[2]]));
    }
    out.xi = xi;
    out.rho = std::sqrt(best);
    if (out.rho > 0.0) {
        out.nu = (y - xi) / out.rho;
        out.has_normal = true;
    }
    return out;
}

std::vector<Vec> sphere_directions(int n, int count)
{
    check_dimension(n);
    if (n == 1) return {Vec(1, 0, 0), Vec(-1, 0, 0)};
    require(count >= 3, "need at least three directions");
    std::vector<Vec> dirs;
    dirs.reserve(count);
    if (n == 2) {
        for (int k = 0; k < count; ++k) {
            const double a = 2.0 * kPi * k / count;
            dirs.emplace_back(std::cos(a), std::sin(a), 0.0);
        }
        return dirs;
    }
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        dirs.emplace_back(r * std::cos(golden * k), r * std::sin(golden * k), z);
    }
    return dirs;
}

std::vector<NormalPoint> sample_normal_bundle(const ConvexPolytope& K, int count)
{
    std::vector<NormalPoint> out;
    for (const Vec& nu : sphere_directions(K.dimension(), count)) {
        int idx = 0;
        K.support(nu, &idx);
        out.push_back({K.vertices()[idx], nu});
    }
    return out;
}

Vec phi_map(const Vec& xi, const Vec& nu, double rho)
{
    require(rho >= 0.0, "correspondence radius must be non-negative");
    return xi + rho * nu;
}

NormalCoordinates phi_inverse(const ConvexPolytope& K, const Vec& x)
{
    const HullProjection p = distance_to_hull(K, x);
    require(p.has_normal, "point lies in the convex body");
    return {p.xi, p.nu, p.rho};
}

bool inscribed_ball_containment(const ConvexPolytope& K, const Vec& i, double rho, double tol, int directions)
{
    for (const NormalPoint& np : sample_normal_bundle(K, directions))
        if (i.dot(np.nu) + 0.5 * rho > np.xi.dot(np.nu) - 0.5 * rho + tol) return false;
    return true;
}

void to_json(nlohmann::json& j, const ConvexPolytope& K)
{
    const int n = K.dimension();
    nlohmann::json verts = nlohmann::json::array();
    for (const Vec& v : K.vertices()) {
        nlohmann::json p = nlohmann::json::array();
        for (int k = 0; k < n; ++k) p.push_back(v[k]);
        verts.push_back(p);
    }
    j = {{"dimension", n}, {"vertices", verts}};
    if (n == 3) j["faces"] = K.faces();
}

}  // namespace dws
