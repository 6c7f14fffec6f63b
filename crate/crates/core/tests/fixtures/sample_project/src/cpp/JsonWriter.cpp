#include <sstream>
#include <string>
#include <vector>

namespace tilekit {

class JsonWriter {
public:
    void beginObject();
    void endObject();
    void beginArray();
    void endArray();
    void key(const std::string& keyName);
    void value(const std::string& text);
    void value(double number);
    void value(bool flag);
    std::string str() const { return m_out.str(); }

private:
    void writeSeparator();
    static std::string escapeString(const std::string& raw);

    std::ostringstream m_out;
    std::vector<bool> m_firstInScope{true};
    bool m_afterKey = false;
    int m_indentLevel = 0;
};

void JsonWriter::writeSeparator()
{
    if (m_afterKey) {
        m_afterKey = false;
        return;
    }
    if (!m_firstInScope.back())
        m_out << ',';
    m_firstInScope.back() = false;
}

std::string JsonWriter::escapeString(const std::string& raw)
{
    std::string escaped;
    escaped.reserve(raw.size() + 2);
    for (char ch : raw) {
        if (ch == '"' || ch == '\\')
            escaped += '\\';
        escaped += ch;
    }
    return escaped;
}

void JsonWriter::beginObject() { writeSeparator(); m_out << '{'; m_firstInScope.push_back(true); ++m_indentLevel; }
void JsonWriter::endObject() { m_out << '}'; m_firstInScope.pop_back(); --m_indentLevel; }
void JsonWriter::beginArray() { writeSeparator(); m_out << '['; m_firstInScope.push_back(true); }
void JsonWriter::endArray() { m_out << ']'; m_firstInScope.pop_back(); }

void JsonWriter::key(const std::string& keyName)
{
    writeSeparator();
    m_out << '"' << escapeString(keyName) << "\":";
    m_afterKey = true;
}

void JsonWriter::value(const std::string& text) { writeSeparator(); m_out << '"' << escapeString(text) << '"'; }
void JsonWriter::value(double number) { writeSeparator(); m_out << number; }
void JsonWriter::value(bool flag) { writeSeparator(); m_out << (flag ? "true" : "false"); }

}
