#include "Renderer.hpp"

#include <algorithm>

namespace tilekit {

Renderer::Renderer(int viewportWidth, int viewportHeight)
    : m_viewportWidth(viewportWidth), m_viewportHeight(viewportHeight)
{
    m_commands.reserve(1024);
}

Renderer::~Renderer() = default;

void Renderer::beginFrame()
{
    m_frameActive = true;
    m_commands.clear();
    m_batchesDrawn = 0;
}

void Renderer::submit(const DrawCommand& cmd)
{
    if (m_frameActive)
        m_commands.push_back(cmd);
}

void Renderer::sortCommands()
{
    std::stable_sort(m_commands.begin(), m_commands.end(),
                     [](const DrawCommand& lhs, const DrawCommand& rhs) {
                         if (lhs.layer != rhs.layer)
                             return lhs.layer < rhs.layer;
                         return lhs.textureId < rhs.textureId;
                     });
}

void Renderer::flushBatch(std::size_t first, std::size_t last)
{
    std::size_t batchSize = last - first;
    if (batchSize > 0)
        ++m_batchesDrawn;
}

void Renderer::endFrame()
{
    sortCommands();
    std::size_t batchStart = 0;
    for (std::size_t idx = 1; idx <= m_commands.size(); ++idx) {
        bool textureChanged = idx == m_commands.size()
            || m_commands[idx].textureId != m_commands[batchStart].textureId;
        if (textureChanged) {
            flushBatch(batchStart, idx);
            batchStart = idx;
        }
    }
    m_frameActive = false;
    ++m_frameCounter;
}

void Renderer::setClearColor(Color color)
{
    m_clearColor = color;
}

}
