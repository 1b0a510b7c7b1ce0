#include "simplexforge/export_geom.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "simplexforge/errors.hpp"

namespace simplexforge {

namespace {

void atomic_write(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    const std::filesystem::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw IoError("rename to " + target.string() + " failed: " + ec.message());
}

}  // namespace

void export_svg(const GaugeBody& body, const Simplex& simplex, const std::string& path) {
    if (body.dim != 2 || simplex.point_dim() != 2) {
        throw ExportError("svg export needs a two-dimensional body and simplex");
    }
    constexpr int kSamples = 512;
    constexpr double kViewScale = 180.0;  // unit ball radius in px, 400x400 canvas
    auto px = [&](double x) { return 200.0 + kViewScale * x; };
    auto py = [&](double y) { return 200.0 - kViewScale * y; };

    std::string svg;
    svg += "<svg xmlns='http://www.w3.org/2000/svg' width='400' height='400' "
           "viewBox='0 0 400 400'>\n";
    svg += "<polygon fill='none' stroke='#355' stroke-width='1.5' points='";
    for (int k = 0; k < kSamples; ++k) {
        const double a = 2.0 * M_PI * static_cast<double>(k) / kSamples;
        const Vector b = boundary_scale(body, Vector{std::cos(a), std::sin(a)});
        svg += std::to_string(px(b[0])) + "," + std::to_string(py(b[1])) + " ";
    }
    svg += "'/>\n";
    svg += "<polygon fill='rgba(200,80,60,0.25)' stroke='#c53' stroke-width='2' points='";
    for (const Vector& v : simplex.vertices) {
        svg += std::to_string(px(v[0])) + "," + std::to_string(py(v[1])) + " ";
    }
    svg += "'/>\n</svg>\n";
    atomic_write(path, svg);
}

void export_obj(const GaugeBody& body, const Simplex& simplex, const std::string& path) {
    if (body.dim != 3 || simplex.point_dim() != 3) {
        throw ExportError("obj export needs a three-dimensional body and simplex");
    }
    constexpr int kAz = 64;
    constexpr int kPol = 32;

    std::string obj = "o body\n";
    // Poles plus a (kPol-1) x kAz grid of boundary samples.
    const Vector north = boundary_scale(body, Vector{0.0, 0.0, 1.0});
    const Vector south = boundary_scale(body, Vector{0.0, 0.0, -1.0});
    auto vline = [](const Vector& v) {
        return "v " + std::to_string(v[0]) + " " + std::to_string(v[1]) + " " +
               std::to_string(v[2]) + "\n";
    };
    obj += vline(north);
    for (int i = 1; i < kPol; ++i) {
        const double polar = M_PI * static_cast<double>(i) / kPol;
        for (int j = 0; j < kAz; ++j) {
            const double az = 2.0 * M_PI * static_cast<double>(j) / kAz;
            const Vector dir{std::sin(polar) * std::cos(az), std::sin(polar) * std::sin(az),
                             std::cos(polar)};
            obj += vline(boundary_scale(body, dir));
        }
    }
    obj += vline(south);
    const int south_idx = 1 + (kPol - 1) * kAz + 1;
    auto ring = [&](int i, int j) { return 2 + i * kAz + (j % kAz); };  // 1-based obj indices
    for (int j = 0; j < kAz; ++j) {
        obj += "f 1 " + std::to_string(ring(0, j)) + " " + std::to_string(ring(0, j + 1)) + "\n";
    }
    for (int i = 0; i + 1 < kPol - 1; ++i) {
        for (int j = 0; j < kAz; ++j) {
            const int a = ring(i, j), b = ring(i, j + 1), c = ring(i + 1, j),
                      d = ring(i + 1, j + 1);
            obj += "f " + std::to_string(a) + " " + std::to_string(b) + " " +
                   std::to_string(d) + "\n";
            obj += "f " + std::to_string(a) + " " + std::to_string(d) + " " +
                   std::to_string(c) + "\n";
        }
    }
    for (int j = 0; j < kAz; ++j) {
        obj += "f " + std::to_string(ring(kPol - 2, j + 1)) + " " +
               std::to_string(ring(kPol - 2, j)) + " " + std::to_string(south_idx) + "\n";
    }

    obj += "o simplex\n";
    const int base = south_idx;
    for (const Vector& v : simplex.vertices) obj += vline(v);
    const int m = simplex.vertex_count();
    // Every triple of vertices is a face of a tetrahedron (or the single
    // triangle when m == 3).
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int k = j + 1; k < m; ++k) {
                obj += "f " + std::to_string(base + 1 + i) + " " + std::to_string(base + 1 + j) +
                       " " + std::to_string(base + 1 + k) + "\n";
            }
        }
    }
    atomic_write(path, obj);
}

void export_geometry(const GaugeBody& body, const Simplex& simplex,
                     const std::string& format, const std::string& path) {
    if (format == "svg") {
        export_svg(body, simplex, path);
    } else if (format == "obj") {
        export_obj(body, simplex, path);
    } else {
        throw ExportError("unsupported export format: " + format);
    }
}

}  // namespace simplexforge
