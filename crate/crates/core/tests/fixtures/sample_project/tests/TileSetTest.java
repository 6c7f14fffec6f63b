package org.tilekit;

public class TileSetTest {
    private TileSet fixtureSet;

    public void setUp() {
        fixtureSet = new TileSet("fixture", 8, 8);
    }

    public void testAddTileReturnsIndex() {
        int firstIndex = fixtureSet.addTile(new Tile("a", 0, 0));
        assert firstIndex == 0;
    }

    public void testLockedSetRejectsTiles() {
        fixtureSet.lock();
        boolean threwException = false;
        try {
            fixtureSet.addTile(new Tile("b", 1, 0));
        } catch (IllegalStateException expected) {
            threwException = true;
        }
        assert threwException;
    }
}
