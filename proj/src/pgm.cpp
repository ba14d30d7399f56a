#include "qagentlab/pgm.hpp"

#include <fstream>
#include <sstream>

namespace qal::pgm {

namespace {

// next whitespace-separated token, skipping '#' comments to end of line
std::string next_token(std::istream &in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n')
                ;
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty())
                return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty())
        throw PgmError("unexpected end of PGM header");
    return tok;
}

int parse_int(std::istream &in, const char *what) {
    const std::string tok = next_token(in);
    try {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception &) {
        throw PgmError(std::string("bad PGM ") + what + ": '" + tok + "'");
    }
}

} // namespace

qie::GrayImage read(std::istream &in) {
    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P5")
        throw PgmError("unsupported PGM magic '" + magic + "' (want P2 or P5)");

    qie::GrayImage img;
    img.width = parse_int(in, "width");
    img.height = parse_int(in, "height");
    const int maxval = parse_int(in, "maxval");
    if (img.width <= 0 || img.height <= 0)
        throw PgmError("non-positive PGM dimensions");
    if (maxval != 255)
        throw PgmError("only maxval 255 is supported, got " +
                       std::to_string(maxval));

    const std::size_t count =
        static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
    img.pixels.resize(count);

    if (magic == "P5") {
        // exactly one whitespace byte after maxval, then raw samples
        in.read(reinterpret_cast<char *>(img.pixels.data()),
                static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count)
            throw PgmError("truncated P5 pixel data");
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const int v = parse_int(in, "pixel");
            if (v < 0 || v > 255)
                throw PgmError("P2 pixel out of range: " + std::to_string(v));
            img.pixels[i] = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

qie::GrayImage read(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PgmError("cannot open " + path.string());
    return read(in);
}

void write(std::ostream &out, const qie::GrayImage &img) {
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char *>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

void write(const std::filesystem::path &path, const qie::GrayImage &img) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw PgmError("cannot open " + path.string() + " for writing");
    write(out, img);
    if (!out)
        throw PgmError("write failed: " + path.string());
}

} // namespace qal::pgm
