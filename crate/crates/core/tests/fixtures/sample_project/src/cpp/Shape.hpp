#pragma once

#include <string>
#include <vector>

namespace tilekit {

class Shape {
public:
    virtual ~Shape() = default;
    virtual double area() const = 0;
    virtual double perimeter() const = 0;
    virtual std::string typeName() const = 0;
    bool isDegenerate() const { return area() <= 0.0; }

protected:
    int m_shapeId = 0;
    std::string m_label;
};

class Circle : public Shape {
public:
    explicit Circle(double radius) : m_radius(radius) {}
    double area() const override;
    double perimeter() const override;
    std::string typeName() const override { return "circle"; }

private:
    double m_radius;
};

class Rectangle : public Shape {
public:
    Rectangle(double width, double height) : m_width(width), m_height(height) {}
    double area() const override { return m_width * m_height; }
    double perimeter() const override { return 2 * (m_width + m_height); }
    std::string typeName() const override { return "rectangle"; }
    bool isSquare() const { return m_width == m_height; }

private:
    double m_width;
    double m_height;
};

double totalArea(const std::vector<Shape*>& shapes);

}
