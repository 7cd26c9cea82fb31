#include <bicover/cover_io.hpp>

#include <bicover/errors.hpp>

#include <string>

#include <json.hpp>

using nlohmann::json;
using std::string;
using std::to_string;

namespace bicover
{
    auto serialize_cover(const CoverSpec & cover) -> string
    {
        string out = "{\"n\":" + to_string(cover.n) + ",\"bicliques\":[";
        bool first_b = true;
        for (const auto & b : cover.bicliques) {
            if (! first_b)
                out += ',';
            first_b = false;
            out += "{\"left\":[";
            bool first = true;
            for (VertexId v : b.left) {
                if (! first)
                    out += ',';
                first = false;
                out += to_string(v);
            }
            out += "],\"right\":[";
            first = true;
            for (VertexId v : b.right) {
                if (! first)
                    out += ',';
                first = false;
                out += to_string(v);
            }
            out += "]}";
        }
        out += "]}";
        return out;
    }

    namespace
    {
        auto parse_side(const json & j, const char * key, std::size_t index) -> std::set<VertexId>
        {
            const string where = string(key) + " of biclique " + to_string(index + 1);
            if (! j.contains(key))
                throw InputError("missing field " + where);
            const auto & arr = j.at(key);
            if (! arr.is_array())
                throw InputError(where + " is not an array");

            std::set<VertexId> side;
            for (const auto & e : arr) {
                if (! e.is_number_integer())
                    throw InputError("non-integer vertex in " + where);
                VertexId v = e.get<VertexId>();
                if (! side.insert(v).second)
                    throw InputError("duplicate vertex " + to_string(v) + " in " + where);
            }
            return side;
        }
    }

    auto parse_cover(std::string_view text) -> CoverSpec
    {
        json j;
        try {
            j = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw InputError(string("malformed JSON: ") + e.what());
        }

        if (! j.is_object())
            throw InputError("cover file must be a JSON object");
        if (! j.contains("n"))
            throw InputError("missing field n");
        if (! j.at("n").is_number_integer())
            throw InputError("field n is not an integer");
        if (! j.contains("bicliques"))
            throw InputError("missing field bicliques");
        if (! j.at("bicliques").is_array())
            throw InputError("field bicliques is not an array");

        CoverSpec cover;
        cover.n = j.at("n").get<int>();
        const auto & arr = j.at("bicliques");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (! arr[i].is_object())
                throw InputError("biclique " + to_string(i + 1) + " is not an object");
            Biclique b;
            b.left = parse_side(arr[i], "left", i);
            b.right = parse_side(arr[i], "right", i);
            cover.bicliques.push_back(std::move(b));
        }

        validate_cover(cover);
        return cover;
    }
}
