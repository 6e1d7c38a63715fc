#include <cmath>
#include <fstream>
#include <sstream>

#include "projinv/imaging.hpp"

namespace projinv {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::string_view bytes, std::size_t& pos) {
    while (pos < bytes.size()) {
        const char c = bytes[pos];
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos])) &&
           bytes[pos] != '#')
        ++pos;
    if (start == pos) throw MalformedImage("truncated header");
    return std::string(bytes.substr(start, pos - start));
}

int parse_header_int(std::string_view bytes, std::size_t& pos, const char* what) {
    const std::string tok = next_token(bytes, pos);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw MalformedImage(std::string("bad ") + what + " token '" + tok + "'");
    }
}

}  // namespace

RasterField load_pgm(std::string_view bytes) {
    std::size_t pos = 0;
    if (next_token(bytes, pos) != "P5") throw MalformedImage("magic number is not P5");
    const int width = parse_header_int(bytes, pos, "width");
    const int height = parse_header_int(bytes, pos, "height");
    const int maxval = parse_header_int(bytes, pos, "maxval");
    if (width < 1 || height < 1) throw MalformedImage("non-positive dimensions");
    if (maxval < 1 || maxval > 255) throw MalformedImage("maxval must be in 1..255");
    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
        throw MalformedImage("missing whitespace after maxval");
    ++pos;  // exactly one whitespace byte separates header and pixels

    const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - pos < need) throw MalformedImage("truncated pixel data");
    std::vector<double> data;
    data.reserve(need);
    for (std::size_t i = 0; i < need; ++i)
        data.push_back(static_cast<unsigned char>(bytes[pos + i]) / static_cast<double>(maxval));
    return {width, height, std::move(data)};
}

std::string save_pgm(const RasterField& r) {
    std::ostringstream os;
    os << "P5\n" << r.width() << " " << r.height() << "\n255\n";
    std::string s = os.str();
    s.reserve(s.size() + static_cast<std::size_t>(r.width()) * r.height());
    for (double v : r.data()) {
        const double clamped = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        s.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(clamped * 255.0))));
    }
    return s;
}

RasterField load_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedImage("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_pgm(buf.str());
}

void save_pgm_file(const RasterField& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    const std::string bytes = save_pgm(r);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace projinv
