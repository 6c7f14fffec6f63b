package org.tilekit;

import java.util.ArrayList;
import java.util.List;

public class QuadTree {
    private static final int MAX_ITEMS = 8;
    private static final int MAX_DEPTH = 6;
    private final CollisionDetector.Box bounds;
    private final int depth;
    private final List<CollisionDetector.Box> items = new ArrayList<>();
    private QuadTree[] quadrants;

    public QuadTree(CollisionDetector.Box bounds, int depth) {
        this.bounds = bounds;
        this.depth = depth;
    }

    public void insert(CollisionDetector.Box item) {
        if (quadrants != null) {
            quadrantFor(item).insert(item);
            return;
        }
        items.add(item);
        if (items.size() > MAX_ITEMS && depth < MAX_DEPTH) {
            subdivide();
        }
    }

    private void subdivide() {
        float midX = (bounds.minX() + bounds.maxX()) / 2;
        float midY = (bounds.minY() + bounds.maxY()) / 2;
        quadrants = new QuadTree[] {
            new QuadTree(new CollisionDetector.Box(bounds.minX(), bounds.minY(), midX, midY), depth + 1),
            new QuadTree(new CollisionDetector.Box(midX, bounds.minY(), bounds.maxX(), midY), depth + 1),
            new QuadTree(new CollisionDetector.Box(bounds.minX(), midY, midX, bounds.maxY()), depth + 1),
            new QuadTree(new CollisionDetector.Box(midX, midY, bounds.maxX(), bounds.maxY()), depth + 1),
        };
        List<CollisionDetector.Box> pendingItems = new ArrayList<>(items);
        items.clear();
        for (CollisionDetector.Box pending : pendingItems) {
            quadrantFor(pending).insert(pending);
        }
    }

    private QuadTree quadrantFor(CollisionDetector.Box item) {
        float midX = (bounds.minX() + bounds.maxX()) / 2;
        float midY = (bounds.minY() + bounds.maxY()) / 2;
        int quadrantIndex = (item.minX() >= midX ? 1 : 0) + (item.minY() >= midY ? 2 : 0);
        return quadrants[quadrantIndex];
    }

    public boolean isLeaf() {
        return quadrants == null;
    }
}
