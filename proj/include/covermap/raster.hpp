#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "covermap/errors.hpp"

namespace covermap {

// Map georeferencing: origin is the top-left corner of pixel (0,0),
// row index grows southwards (y_map = origin_y - y_px * pixel_size).
struct GeoRef {
    double origin_x = 0.0;
    double origin_y = 0.0;
    double pixel_size = 0.2;

    bool operator==(const GeoRef&) const = default;
};

struct Window {
    int x0 = 0;
    int y0 = 0;
    int w = 0;
    int h = 0;

    bool operator==(const Window&) const = default;
    int x1() const { return x0 + w; }
    int y1() const { return y0 + h; }
    bool contains(int x, int y) const {
        return x >= x0 && x < x1() && y >= y0 && y < y1();
    }
};

enum class EdgePolicy { Reflect, Zero };

namespace detail {

inline std::size_t checked_pixel_count(int w, int h, int b) {
    if (w <= 0 || h <= 0 || b <= 0)
        throw FormatError("raster dimensions must be positive");
    const std::uint64_t n = std::uint64_t(w) * std::uint64_t(h) * std::uint64_t(b);
    // single rasters above 4 GiB are out of scope
    if (n >= (std::uint64_t(1) << 32))
        throw FormatError("raster dimension overflow");
    return static_cast<std::size_t>(n);
}

// Symmetric reflection (edge pixel included), the read_window REFLECT policy.
inline int reflect_index(int i, int n) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -i - 1;
        if (i >= n) i = 2 * n - 1 - i;
    }
    return i;
}

}  // namespace detail

// Pixel-major storage for all containers: index = (y*width + x)*bands + b,
// so the per-pixel class vector is contiguous.
template <typename T>
struct BasicRaster {
    int width = 0;
    int height = 0;
    int bands = 0;
    std::vector<T> data;
    std::optional<GeoRef> geo;

    BasicRaster() = default;
    BasicRaster(int w, int h, int b, T fill = T{})
        : width(w), height(h), bands(b), data(detail::checked_pixel_count(w, h, b), fill) {}

    std::size_t index(int x, int y, int b) const {
        return (std::size_t(y) * width + x) * bands + b;
    }
    T at(int x, int y, int b) const { return data[index(x, y, b)]; }
    T& at(int x, int y, int b) { return data[index(x, y, b)]; }
    const T* pixel(int x, int y) const { return data.data() + index(x, y, 0); }
    T* pixel(int x, int y) { return data.data() + index(x, y, 0); }
    std::size_t size() const { return data.size(); }
    Window full_window() const { return Window{0, 0, width, height}; }
};

// H x W x bands float raster; the 5-band image stack lives here.
struct RasterF32 : BasicRaster<float> {
    using BasicRaster::BasicRaster;
};

// Per-class probability raster, u8 0-255 per (pixel, class).
// prob(v) = v / 255.0 is the only sanctioned dequantization.
struct HeatMap : BasicRaster<std::uint8_t> {
    HeatMap() = default;
    HeatMap(int w, int h, int classes, std::uint8_t fill = 0)
        : BasicRaster(w, h, classes, fill) {}
    int classes() const { return bands; }
};

// Binary multilabel mask with C class bands plus the complementary band
// (band C is 1 iff no class band is set at that pixel).
struct LabelMask : BasicRaster<std::uint8_t> {
    LabelMask() = default;
    LabelMask(int w, int h, int bands_with_complement, std::uint8_t fill = 0)
        : BasicRaster(w, h, bands_with_complement, fill) {}
    int classes() const { return bands - 1; }

    // Recomputes band C from the class bands. Returns true if a stored
    // complementary band disagreed with the recomputed one.
    bool normalize_complementary() {
        bool mismatch = false;
        const int c = classes();
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                std::uint8_t* px = pixel(x, y);
                std::uint8_t any = 0;
                for (int b = 0; b < c; ++b) any |= px[b];
                const std::uint8_t comp = any ? 0 : 1;
                if (px[c] != comp) mismatch = true;
                px[c] = comp;
            }
        }
        return mismatch;
    }
};

// Quantization contract: quantize(p) = round(clamp(p,0,1)*255) with
// round-half-away-from-zero; dequantize(v) = v/255.
inline std::uint8_t quantize_value(float p) {
    if (!(p > 0.0f)) return 0;  // NaN and negatives clamp to 0
    if (p >= 1.0f) return 255;
    return static_cast<std::uint8_t>(std::lround(double(p) * 255.0));
}

inline float dequantize_value(std::uint8_t v) {
    return float(v) / 255.0f;
}

HeatMap quantize(const RasterF32& r);
RasterF32 dequantize(const HeatMap& h);

// Copies win out of r; pixels outside the raster are filled per the edge
// policy. Throws WindowError when the window does not intersect the raster.
template <typename T>
BasicRaster<T> read_window(const BasicRaster<T>& r, const Window& win,
                           EdgePolicy policy = EdgePolicy::Reflect) {
    if (win.w <= 0 || win.h <= 0)
        throw WindowError("window extents must be positive");
    if (win.x1() <= 0 || win.y1() <= 0 || win.x0 >= r.width || win.y0 >= r.height)
        throw WindowError("window does not intersect raster");
    BasicRaster<T> out(win.w, win.h, r.bands);
    if (r.geo) {
        GeoRef g = *r.geo;
        g.origin_x += win.x0 * g.pixel_size;
        g.origin_y -= win.y0 * g.pixel_size;
        out.geo = g;
    }
    for (int y = 0; y < win.h; ++y) {
        const int sy = win.y0 + y;
        const bool y_in = sy >= 0 && sy < r.height;
        const int ry = y_in ? sy : detail::reflect_index(sy, r.height);
        for (int x = 0; x < win.w; ++x) {
            const int sx = win.x0 + x;
            const bool in = y_in && sx >= 0 && sx < r.width;
            T* dst = out.pixel(x, y);
            if (in) {
                const T* src = r.pixel(sx, sy);
                for (int b = 0; b < r.bands; ++b) dst[b] = src[b];
            } else if (policy == EdgePolicy::Zero) {
                for (int b = 0; b < r.bands; ++b) dst[b] = T{};
            } else {
                const int rx = detail::reflect_index(sx, r.width);
                const T* src = r.pixel(rx, ry);
                for (int b = 0; b < r.bands; ++b) dst[b] = src[b];
            }
        }
    }
    return out;
}

inline RasterF32 read_window(const RasterF32& r, const Window& win,
                             EdgePolicy policy = EdgePolicy::Reflect) {
    RasterF32 out;
    static_cast<BasicRaster<float>&>(out) = read_window<float>(r, win, policy);
    return out;
}

inline HeatMap read_window(const HeatMap& r, const Window& win,
                           EdgePolicy policy = EdgePolicy::Reflect) {
    HeatMap out;
    static_cast<BasicRaster<std::uint8_t>&>(out) =
        read_window<std::uint8_t>(static_cast<const BasicRaster<std::uint8_t>&>(r), win, policy);
    return out;
}

inline LabelMask read_window(const LabelMask& r, const Window& win,
                             EdgePolicy policy = EdgePolicy::Reflect) {
    LabelMask out;
    static_cast<BasicRaster<std::uint8_t>&>(out) =
        read_window<std::uint8_t>(static_cast<const BasicRaster<std::uint8_t>&>(r), win, policy);
    return out;
}

}  // namespace covermap
