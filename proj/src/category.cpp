#include "sia/category.hpp"

namespace sia {

Obj tensor_obj(const Obj& a, const Obj& b) { return Obj::tensor(a, b); }

Mor tensor_mor(const Mor& f, const Mor& g) {
    return Mor(Obj::tensor(f.dom(), g.dom()), Obj::tensor(f.cod(), g.cod()),
               kernels::kron(f.mat(), g.mat()));
}

Mor associator(const Obj& a, const Obj& b, const Obj& c) {
    const Obj dom = Obj::tensor(Obj::tensor(a, b), c);
    const Obj cod = Obj::tensor(a, Obj::tensor(b, c));
    return Mor(dom, cod, Mat::identity(dom.dim()));
}

Mor associator_inv(const Obj& a, const Obj& b, const Obj& c) {
    const Obj dom = Obj::tensor(a, Obj::tensor(b, c));
    const Obj cod = Obj::tensor(Obj::tensor(a, b), c);
    return Mor(dom, cod, Mat::identity(dom.dim()));
}

Mor left_unitor(const Obj& a) {
    return Mor(Obj::tensor(Obj::unit(), a), a, Mat::identity(a.dim()));
}

Mor left_unitor_inv(const Obj& a) {
    return Mor(a, Obj::tensor(Obj::unit(), a), Mat::identity(a.dim()));
}

Mor right_unitor(const Obj& a) {
    return Mor(Obj::tensor(a, Obj::unit()), a, Mat::identity(a.dim()));
}

Mor right_unitor_inv(const Obj& a) {
    return Mor(a, Obj::tensor(a, Obj::unit()), Mat::identity(a.dim()));
}

Mor braiding(const Obj& a, const Obj& b) {
    const std::size_t da = a.dim(), db = b.dim();
    Mat m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) m.at(j * da + i, i * db + j) = Rat(1);
    return Mor(Obj::tensor(a, b), Obj::tensor(b, a), std::move(m));
}

Obj hom_obj(const Obj& a, const Obj& b) { return Obj::hom(a, b); }

std::vector<Rat> flatten_map(const Mor& f) {
    const std::size_t da = f.dom().dim(), db = f.cod().dim();
    std::vector<Rat> v(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) v[i * db + j] = f.mat().at(j, i);
    return v;
}

Mor unflatten_map(const Obj& a, const Obj& b, const std::vector<Rat>& coords) {
    const std::size_t da = a.dim(), db = b.dim();
    if (coords.size() != da * db) throw TypeError("hom-element coordinate count mismatch");
    Mat m(db, da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) m.at(j, i) = coords[i * db + j];
    return Mor(a, b, std::move(m));
}

Mor element_of_hom(const Mor& f) {
    return Mor(Obj::unit(), Obj::hom(f.dom(), f.cod()), Mat::column(flatten_map(f)));
}

Mor curry(const Mor& f) {
    if (f.dom().kind() != ObjKind::Tensor)
        throw TypeError("curry needs a tensor domain, got " + f.dom().to_string());
    const Obj a = f.dom().left(), b = f.dom().right(), c = f.cod();
    const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
    Mat m(da * dc, db);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < dc; ++k)
                m.at(i * dc + k, j) = f.mat().at(k, i * db + j);
    return Mor(b, Obj::hom(a, c), std::move(m));
}

Mor uncurry(const Mor& g) {
    if (g.cod().kind() != ObjKind::Hom)
        throw TypeError("uncurry needs a Hom codomain, got " + g.cod().to_string());
    const Obj a = g.cod().left(), c = g.cod().right(), b = g.dom();
    const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
    Mat m(dc, da * db);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < dc; ++k)
                m.at(k, i * db + j) = g.mat().at(i * dc + k, j);
    return Mor(Obj::tensor(a, b), c, std::move(m));
}

Mor eval(const Obj& a, const Obj& b) {
    const std::size_t da = a.dim(), db = b.dim(), dh = da * db;
    Mat m(db, da * dh);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) m.at(j, i * dh + i * db + j) = Rat(1);
    return Mor(Obj::tensor(a, Obj::hom(a, b)), b, std::move(m));
}

Mor hom_lift(const Obj& a, const Obj& b, const Obj& c) {
    const std::size_t da = a.dim(), db = b.dim(), dc = c.dim();
    Mat m(da * db * dc, da * db * dc);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < dc; ++k)
                m.at(j * (da * dc) + i * dc + k, (i * db + j) * dc + k) = Rat(1);
    return Mor(Obj::hom(Obj::tensor(a, b), c), Obj::hom(b, Obj::hom(a, c)), std::move(m));
}

Mor composition_map(const Obj& x, const Obj& y, const Obj& z) {
    const std::size_t dx = x.dim(), dy = y.dim(), dz = z.dim();
    const Obj hxy = Obj::hom(x, y), hyz = Obj::hom(y, z);
    Mat m(dx * dz, dx * dy * dy * dz);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t l = 0; l < dz; ++l)
                m.at(i * dz + l, (i * dy + j) * (dy * dz) + j * dz + l) = Rat(1);
    return Mor(Obj::tensor(hxy, hyz), Obj::hom(x, z), std::move(m));
}

Mor inflation_map(const Obj& x, const Obj& y, const Obj& z) {
    const std::size_t dx = x.dim(), dy = y.dim(), dz = z.dim();
    const Obj zx = Obj::tensor(z, x), zy = Obj::tensor(z, y);
    Mat m(zx.dim() * zy.dim(), dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t k = 0; k < dz; ++k)
                m.at((k * dx + i) * (dz * dy) + k * dy + j, i * dy + j) = Rat(1);
    return Mor(Obj::hom(x, y), Obj::hom(zx, zy), std::move(m));
}

Mor coinflation_map(const Obj& x, const Obj& y, const Obj& z) {
    const std::size_t dx = x.dim(), dy = y.dim(), dz = z.dim();
    const Obj xz = Obj::tensor(x, z), yz = Obj::tensor(y, z);
    Mat m(xz.dim() * yz.dim(), dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t k = 0; k < dz; ++k)
                m.at((i * dz + k) * (dy * dz) + j * dz + k, i * dy + j) = Rat(1);
    return Mor(Obj::hom(x, y), Obj::hom(xz, yz), std::move(m));
}

Mor hom_post(const Mor& g, const Obj& x) {
    const std::size_t dx = x.dim(), dy = g.dom().dim(), dw = g.cod().dim();
    Mat m(dx * dw, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t l = 0; l < dw; ++l) {
                const Rat& c = g.mat().at(l, j);
                if (!c.is_zero()) m.at(i * dw + l, i * dy + j) = c;
            }
    return Mor(Obj::hom(x, g.dom()), Obj::hom(x, g.cod()), std::move(m));
}

Mor hom_pre(const Mor& g, const Obj& y) {
    const std::size_t dxp = g.dom().dim(), dx = g.cod().dim(), dy = y.dim();
    Mat m(dxp * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t mcol = 0; mcol < dxp; ++mcol) {
                const Rat& c = g.mat().at(i, mcol);
                if (!c.is_zero()) m.at(mcol * dy + j, i * dy + j) = c;
            }
    return Mor(Obj::hom(g.cod(), y), Obj::hom(g.dom(), y), std::move(m));
}

Mor hom_post_inflate(const Mor& mu, const Obj& x) {
    if (mu.dom().kind() != ObjKind::Tensor)
        throw TypeError("hom_post_inflate needs mu with tensor domain");
    const Obj z = mu.dom().left(), y = mu.dom().right(), w = mu.cod();
    const std::size_t dx = x.dim(), dy = y.dim(), dz = z.dim(), dw = w.dim();
    Mat m(dz * dx * dw, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t mm = 0; mm < dz; ++mm)
                for (std::size_t ww = 0; ww < dw; ++ww) {
                    const Rat& c = mu.mat().at(ww, mm * dy + j);
                    if (!c.is_zero()) m.at((mm * dx + i) * dw + ww, i * dy + j) = c;
                }
    return Mor(Obj::hom(x, y), Obj::hom(Obj::tensor(z, x), w), std::move(m));
}

Mor hom_post_coinflate(const Mor& mu, const Obj& x) {
    if (mu.dom().kind() != ObjKind::Tensor)
        throw TypeError("hom_post_coinflate needs mu with tensor domain");
    const Obj y = mu.dom().left(), z = mu.dom().right(), w = mu.cod();
    const std::size_t dx = x.dim(), dy = y.dim(), dz = z.dim(), dw = w.dim();
    Mat m(dx * dz * dw, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t mm = 0; mm < dz; ++mm)
                for (std::size_t ww = 0; ww < dw; ++ww) {
                    const Rat& c = mu.mat().at(ww, j * dz + mm);
                    if (!c.is_zero()) m.at((i * dz + mm) * dw + ww, i * dy + j) = c;
                }
    return Mor(Obj::hom(x, y), Obj::hom(Obj::tensor(x, z), w), std::move(m));
}

Mor hom_left_act_via_source(const Mor& rho, const Obj& y) {
    if (rho.dom().kind() != ObjKind::Tensor)
        throw TypeError("hom_left_act_via_source needs a right action X(x)B -> X");
    const Obj x = rho.cod(), b = rho.dom().right();
    const std::size_t dx = x.dim(), db = b.dim(), dy = y.dim(), dh = dx * dy;
    Mat m(dh, db * dh);
    for (std::size_t mm = 0; mm < db; ++mm)
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t j = 0; j < dy; ++j)
                for (std::size_t xx = 0; xx < dx; ++xx) {
                    const Rat& c = rho.mat().at(i, xx * db + mm);
                    if (!c.is_zero()) m.at(xx * dy + j, mm * dh + i * dy + j) = c;
                }
    const Obj h = Obj::hom(x, y);
    return Mor(Obj::tensor(b, h), h, std::move(m));
}

Mor hom_right_act_via_target(const Mor& rho, const Obj& x) {
    if (rho.dom().kind() != ObjKind::Tensor)
        throw TypeError("hom_right_act_via_target needs a right action Y(x)C -> Y");
    const Obj y = rho.cod(), c = rho.dom().right();
    const std::size_t dx = x.dim(), dy = y.dim(), dc = c.dim(), dh = dx * dy;
    Mat m(dh, dh * dc);
    for (std::size_t i = 0; i < dx; ++i)
        for (std::size_t j = 0; j < dy; ++j)
            for (std::size_t cc = 0; cc < dc; ++cc)
                for (std::size_t yy = 0; yy < dy; ++yy) {
                    const Rat& coeff = rho.mat().at(yy, j * dc + cc);
                    if (!coeff.is_zero())
                        m.at(i * dy + yy, (i * dy + j) * dc + cc) = coeff;
                }
    const Obj h = Obj::hom(x, y);
    return Mor(Obj::tensor(h, c), h, std::move(m));
}

}  // namespace sia
