#include "gazebench/types.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gazebench {

double SaliencyMap::total_mass() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

void SaliencyMap::validate() const {
    if (width <= 0 || height <= 0)
        throw RangeError("saliency map dims must be positive");
    if (values.size() != static_cast<std::size_t>(width) * height)
        throw RangeError("saliency map grid length does not match width*height");
    for (double v : values)
        if (v < 0.0) throw RangeError("saliency map values must be nonnegative");
    if (total_mass() <= 0.0)
        throw DegenerateMapError("saliency map has zero total mass");
}

std::string to_string(QuestionDifficulty d) {
    return d == QuestionDifficulty::Easy ? "easy" : "hard";
}

std::string to_string(NodeCount n) {
    return n == NodeCount::Three ? "3 nodes" : "6 nodes";
}

QuestionDifficulty difficulty_from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "easy") return QuestionDifficulty::Easy;
    if (t == "hard") return QuestionDifficulty::Hard;
    throw SchemaError("unknown question difficulty: " + s);
}

NodeCount node_count_from_int(int n) {
    if (n == 3) return NodeCount::Three;
    if (n == 6) return NodeCount::Six;
    throw SchemaError("node count must be 3 or 6, got " + std::to_string(n));
}

std::pair<double, double> normalize_point(double px, double py, int width, int height) {
    if (width <= 0 || height <= 0)
        throw RangeError("normalize_point: dims must be positive");
    if (px < 0.0 || px > width || py < 0.0 || py > height)
        throw RangeError("normalize_point: point outside [0,width]x[0,height]");
    return {px / width, py / height};
}

std::pair<double, double> denormalize_point(double nx, double ny, int width, int height) {
    if (width <= 0 || height <= 0)
        throw RangeError("denormalize_point: dims must be positive");
    return {nx * width, ny * height};
}

} // namespace gazebench
