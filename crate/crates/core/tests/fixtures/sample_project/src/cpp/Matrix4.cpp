#include "Matrix4.hpp"

namespace tilekit {

Matrix4 Matrix4::identity()
{
    Matrix4 m;
    for (int diag = 0; diag < 4; ++diag)
        m.cells[diag * 5] = 1.0f;
    return m;
}

Matrix4 Matrix4::translation(float dx, float dy, float dz)
{
    Matrix4 m = identity();
    m.cells[3] = dx;
    m.cells[7] = dy;
    m.cells[11] = dz;
    return m;
}

Matrix4 Matrix4::uniformScale(float s)
{
    Matrix4 m;
    m.cells[0] = m.cells[5] = m.cells[10] = s;
    m.cells[15] = 1.0f;
    return m;
}

Matrix4 Matrix4::operator*(const Matrix4& rhs) const
{
    Matrix4 product;
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) {
            float dotSum = 0.0f;
            for (int k = 0; k < 4; ++k)
                dotSum += at(row, k) * rhs.at(k, col);
            product.cells[row * 4 + col] = dotSum;
        }
    return product;
}

bool Matrix4::isIdentity() const
{
    Matrix4 reference = identity();
    return cells == reference.cells;
}

Matrix4 Matrix4::transposed() const
{
    Matrix4 flipped;
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col)
            flipped.cells[col * 4 + row] = at(row, col);
    return flipped;
}

}
