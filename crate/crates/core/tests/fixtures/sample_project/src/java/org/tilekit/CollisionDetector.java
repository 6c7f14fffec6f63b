package org.tilekit;

import java.util.ArrayList;
import java.util.List;

public class CollisionDetector {
    public record Box(float minX, float minY, float maxX, float maxY) {
        boolean overlaps(Box other) {
            return minX < other.maxX && other.minX < maxX && minY < other.maxY && other.minY < maxY;
        }
    }

    private final List<Box> staticBoxes = new ArrayList<>();
    private long pairChecks;

    public void addStatic(Box box) {
        staticBoxes.add(box);
    }

    public List<Box> collisions(Box moving) {
        List<Box> hits = new ArrayList<>();
        for (Box candidate : staticBoxes) {
            pairChecks++;
            if (candidate.overlaps(moving)) {
                hits.add(candidate);
            }
        }
        return hits;
    }

    public boolean collidesAny(Box moving) {
        for (Box candidate : staticBoxes) {
            if (candidate.overlaps(moving)) {
                return true;
            }
        }
        return false;
    }

    public long getPairChecks() {
        return pairChecks;
    }
}
