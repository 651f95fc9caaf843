#include "domainlab/geometry.hpp"

#include <algorithm>

// Exact sign evaluation for orient2d follows the adaptive expansion scheme of
// Shewchuk's robust predicates: a cheap filtered evaluation first, then
// staged exact corrections only when the filter cannot decide. Requires
// strict IEEE-754 double arithmetic (no fast-math).

namespace domainlab {
namespace {

constexpr double kSplitter = 134217729.0;  // 2^27 + 1
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kResultErrBound = (3.0 + 8.0 * kEps) * kEps;
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kCcwErrBoundB = (2.0 + 12.0 * kEps) * kEps;
constexpr double kCcwErrBoundC = (9.0 + 64.0 * kEps) * kEps * kEps;

inline void fast_two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bvirt = x - a;
    y = b - bvirt;
}

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    double bvirt = x - a;
    double avirt = x - bvirt;
    double bround = b - bvirt;
    double around = a - avirt;
    y = around + bround;
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    double bvirt = a - x;
    double avirt = x + bvirt;
    double bround = bvirt - b;
    double around = a - avirt;
    y = around + bround;
}

inline void two_diff_tail(double a, double b, double x, double& y) {
    double bvirt = a - x;
    double avirt = x + bvirt;
    double bround = bvirt - b;
    double around = a - avirt;
    y = around + bround;
}

inline void split(double a, double& hi, double& lo) {
    double c = kSplitter * a;
    double abig = c - a;
    hi = c - abig;
    lo = a - hi;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    double ahi, alo, bhi, blo;
    split(a, ahi, alo);
    split(b, bhi, blo);
    double err1 = x - (ahi * bhi);
    double err2 = err1 - (alo * bhi);
    double err3 = err2 - (ahi * blo);
    y = (alo * blo) - err3;
}

inline void two_one_diff(double a1, double a0, double b, double& x2, double& x1, double& x0) {
    double i;
    two_diff(a0, b, i, x0);
    two_sum(a1, i, x2, x1);
}

inline void two_two_diff(double a1, double a0, double b1, double b0, double& x3, double& x2,
                         double& x1, double& x0) {
    double j, k;
    two_one_diff(a1, a0, b0, j, k, x0);
    two_one_diff(j, k, b1, x3, x2, x1);
}

int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f, double* h) {
    int eindex = 0, findex = 0, hindex = 0;
    double Q, Qnew, hh;
    double enow = e[0], fnow = f[0];
    if ((fnow > enow) == (fnow > -enow)) {
        Q = enow;
        ++eindex;
    } else {
        Q = fnow;
        ++findex;
    }
    if (eindex < elen && findex < flen) {
        enow = e[eindex];
        fnow = f[findex];
        if ((fnow > enow) == (fnow > -enow)) {
            fast_two_sum(enow, Q, Qnew, hh);
            ++eindex;
        } else {
            fast_two_sum(fnow, Q, Qnew, hh);
            ++findex;
        }
        Q = Qnew;
        if (hh != 0.0) h[hindex++] = hh;
        while (eindex < elen && findex < flen) {
            enow = e[eindex];
            fnow = f[findex];
            if ((fnow > enow) == (fnow > -enow)) {
                two_sum(Q, enow, Qnew, hh);
                ++eindex;
            } else {
                two_sum(Q, fnow, Qnew, hh);
                ++findex;
            }
            Q = Qnew;
            if (hh != 0.0) h[hindex++] = hh;
        }
    }
    while (eindex < elen) {
        two_sum(Q, e[eindex], Qnew, hh);
        ++eindex;
        Q = Qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    while (findex < flen) {
        two_sum(Q, f[findex], Qnew, hh);
        ++findex;
        Q = Qnew;
        if (hh != 0.0) h[hindex++] = hh;
    }
    if (Q != 0.0 || hindex == 0) h[hindex++] = Q;
    return hindex;
}

inline double expansion_estimate(int elen, const double* e) {
    double q = e[0];
    for (int i = 1; i < elen; ++i) q += e[i];
    return q;
}

double orient2d_adapt(const Point& pa, const Point& pb, const Point& pc, double detsum) {
    double acx = pa.x - pc.x;
    double bcx = pb.x - pc.x;
    double acy = pa.y - pc.y;
    double bcy = pb.y - pc.y;

    double detleft, detlefttail, detright, detrighttail;
    two_product(acx, bcy, detleft, detlefttail);
    two_product(acy, bcx, detright, detrighttail);

    double B[4];
    two_two_diff(detleft, detlefttail, detright, detrighttail, B[3], B[2], B[1], B[0]);

    double det = expansion_estimate(4, B);
    double errbound = kCcwErrBoundB * detsum;
    if (det >= errbound || -det >= errbound) return det;

    double acxtail, bcxtail, acytail, bcytail;
    two_diff_tail(pa.x, pc.x, acx, acxtail);
    two_diff_tail(pb.x, pc.x, bcx, bcxtail);
    two_diff_tail(pa.y, pc.y, acy, acytail);
    two_diff_tail(pb.y, pc.y, bcy, bcytail);

    if (acxtail == 0.0 && acytail == 0.0 && bcxtail == 0.0 && bcytail == 0.0) return det;

    errbound = kCcwErrBoundC * detsum + kResultErrBound * std::abs(det);
    det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail);
    if (det >= errbound || -det >= errbound) return det;

    double s1, s0, t1, t0, u[4];
    double C1[8], C2[12], D[16];

    two_product(acxtail, bcy, s1, s0);
    two_product(acytail, bcx, t1, t0);
    two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
    int c1len = fast_expansion_sum_zeroelim(4, B, 4, u, C1);

    two_product(acx, bcytail, s1, s0);
    two_product(acy, bcxtail, t1, t0);
    two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
    int c2len = fast_expansion_sum_zeroelim(c1len, C1, 4, u, C2);

    two_product(acxtail, bcytail, s1, s0);
    two_product(acytail, bcxtail, t1, t0);
    two_two_diff(s1, s0, t1, t0, u[3], u[2], u[1], u[0]);
    int dlen = fast_expansion_sum_zeroelim(c2len, C2, 4, u, D);

    return D[dlen - 1];
}

}  // namespace

double orient2d(const Point& pa, const Point& pb, const Point& pc) {
    double detleft = (pa.x - pc.x) * (pb.y - pc.y);
    double detright = (pa.y - pc.y) * (pb.x - pc.x);
    double det = detleft - detright;
    double detsum;

    if (detleft > 0.0) {
        if (detright <= 0.0) return det;
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return det;
        detsum = -detleft - detright;
    } else {
        return det;
    }

    double errbound = kCcwErrBoundA * detsum;
    if (det >= errbound || -det >= errbound) return det;
    return orient2d_adapt(pa, pb, pc, detsum);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orient2d_sign(a, b, p) != 0) return false;
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) && p.y >= std::min(a.y, b.y) &&
           p.y <= std::max(a.y, b.y);
}

bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient2d_sign(a, b, c);
    int o2 = orient2d_sign(a, b, d);
    int o3 = orient2d_sign(c, d, a);
    int o4 = orient2d_sign(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient2d_sign(a, b, c);
    int o2 = orient2d_sign(a, b, d);
    int o3 = orient2d_sign(c, d, a);
    int o4 = orient2d_sign(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    Point ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    Point proj{a.x + t * ab.x, a.y + t * ab.y};
    return distance(p, proj);
}

void segment_contact_params(const Point& a, const Point& b, const Point& c, const Point& d,
                            std::vector<double>& out) {
    if (!segments_intersect(a, b, c, d)) return;
    Point ab = b - a;
    Point cd = d - c;
    double denom = cross(ab, cd);
    if (denom != 0.0) {
        double t = cross(c - a, cd) / denom;
        out.push_back(std::clamp(t, 0.0, 1.0));
        return;
    }
    // Collinear overlap: project c and d on [a,b].
    double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        out.push_back(0.0);
        return;
    }
    for (const Point& q : {c, d}) {
        if (on_segment(a, b, q)) out.push_back(std::clamp(dot(q - a, ab) / len2, 0.0, 1.0));
    }
    if (on_segment(c, d, a)) out.push_back(0.0);
    if (on_segment(c, d, b)) out.push_back(1.0);
}

double ring_signed_area(const Ring& r) {
    double s = 0.0;
    size_t n = r.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = r[i];
        const Point& q = r[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

bool ring_is_simple(const Ring& r) {
    size_t n = r.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % n];
        if (a == b) return false;
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Point& c = r[j];
            const Point& d = r[(j + 1) % n];
            if (adjacent) {
                // Shared endpoint allowed; anything more means a spike/overlap.
                if (segments_cross_properly(a, b, c, d)) return false;
                int shared = 0;
                Point shared_pt;
                for (const Point& p : {a, b}) {
                    if (p == c || p == d) {
                        ++shared;
                        shared_pt = p;
                    }
                }
                if (shared != 1) return false;
                // The non-shared endpoints must not lie on the other segment.
                const Point& other1 = (a == shared_pt) ? b : a;
                const Point& other2 = (c == shared_pt) ? d : c;
                if (on_segment(c, d, other1) || on_segment(a, b, other2)) return false;
            } else {
                if (segments_intersect(a, b, c, d)) return false;
            }
        }
    }
    return true;
}

bool point_on_ring(const Ring& r, const Point& p) {
    size_t n = r.size();
    for (size_t i = 0; i < n; ++i) {
        if (on_segment(r[i], r[(i + 1) % n], p)) return true;
    }
    return false;
}

bool point_in_ring(const Ring& r, const Point& p, bool boundary_value) {
    if (point_on_ring(r, p)) return boundary_value;
    bool inside = false;
    size_t n = r.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = r[i];
        const Point& b = r[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            int o = orient2d_sign(a, b, p);
            if (b.y > a.y ? o > 0 : o < 0) inside = !inside;
        }
    }
    return inside;
}

}  // namespace domainlab
