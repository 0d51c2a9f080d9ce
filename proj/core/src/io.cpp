#include "lpocode/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lpocode/errors.hpp"

namespace lpocode {

namespace {

std::string strip(std::string line)
{
    if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

Word parse_word(const std::string& text, std::size_t line)
{
    try {
        return Word::from_string(text);
    } catch (const Error& e) {
        throw InputError("line " + std::to_string(line) + ": " + e.what());
    }
}

} // namespace

std::vector<Word> read_words(std::istream& in)
{
    std::vector<Word> words;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string text = strip(line);
        if (text.empty())
            continue;
        Word word = parse_word(text, line_number);
        if (!words.empty() && (word.length() != words.front().length() || word.weight() != words.front().weight()))
            throw InputError("line " + std::to_string(line_number) + ": word " + text +
                             " differs in length or weight from the first word");
        words.push_back(word);
    }
    if (words.empty())
        throw InputError("word file holds no words");
    return words;
}

void write_words(std::ostream& out, std::span<const Word> words)
{
    for (const Word& word : words)
        out << word.to_string() << '\n';
}

OrientationFile read_orientation(std::istream& in)
{
    OrientationFile file;
    std::string line;
    std::size_t line_number = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string text = strip(line);
        if (text.empty())
            continue;
        std::istringstream fields(text);
        if (!have_header) {
            std::string extra;
            if (!(fields >> file.n >> file.w) || (fields >> extra) || file.n < 2 || file.n > kMaxWordLength ||
                file.w < 1 || file.w >= file.n)
                throw InputError("line " + std::to_string(line_number) + ": expected header 'n w'");
            have_header = true;
            continue;
        }
        std::string from, arrow, to, extra;
        if (!(fields >> from >> arrow >> to) || arrow != "->" || (fields >> extra))
            throw InputError("line " + std::to_string(line_number) + ": expected 'FROM -> TO'");
        const Word a = parse_word(from, line_number);
        const Word b = parse_word(to, line_number);
        for (const Word& word : {a, b})
            if (word.length() != file.n || word.weight() != file.w)
                throw InputError("line " + std::to_string(line_number) + ": word " + word.to_string() +
                                 " does not match the header");
        if (hamming(a, b) != 2)
            throw InputError("line " + std::to_string(line_number) + ": arc joins words that are not adjacent");
        file.arcs.emplace_back(a, b);
    }
    if (!have_header)
        throw InputError("orientation file is empty");
    return file;
}

void write_orientation(std::ostream& out, const Orientation& orientation)
{
    const auto& parent = orientation.domain().parent();
    out << parent.n << ' ' << parent.w << '\n';
    for (const auto& [from, to] : arcs_of(orientation))
        out << from.to_string() << " -> " << to.to_string() << '\n';
}

void write_histogram_csv(std::ostream& out, const ErrorHistogram& histogram)
{
    out << "errors,count\n";
    for (std::size_t k = 0; k < histogram.size(); ++k)
        out << k << ',' << histogram[k] << '\n';
}

void write_histogram_csv(std::ostream& out, const NullDistribution& distribution)
{
    out << "errors,count\n";
    for (std::size_t k = 0; k < distribution.counts.size(); ++k)
        out << k << ',' << distribution.counts[k] << '\n';
}

void write_bounds_csv(std::ostream& out, std::span<const BoundRecord> rows)
{
    out << "n,w,W,lower,upper,exact\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.w << ',' << row.max_outdegree << ',' << row.lower << ',' << row.upper << ',';
        if (row.exact)
            out << *row.exact;
        out << '\n';
    }
}

void write_type2_csv(std::ostream& out, std::span<const Type2Point> points)
{
    out << "size,failure_proportion\n";
    char buffer[32];
    for (const auto& point : points) {
        const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, point.failure_proportion);
        out << point.size << ',' << std::string_view(buffer, static_cast<std::size_t>(end - buffer)) << '\n';
    }
}

} // namespace lpocode
