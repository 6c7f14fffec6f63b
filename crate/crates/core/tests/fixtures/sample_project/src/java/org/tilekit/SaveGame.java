package org.tilekit;

import java.io.DataInputStream;
import java.io.DataOutputStream;
import java.io.IOException;
import java.io.InputStream;
import java.io.OutputStream;
import java.util.Map;
import java.util.TreeMap;

public class SaveGame {
    private static final int FORMAT_VERSION = 3;
    private final Map<String, Integer> playerStats = new TreeMap<>();
    private String playerName = "";
    private long playTimeMillis;
    private int checkpointId;

    public void write(OutputStream out) throws IOException {
        DataOutputStream data = new DataOutputStream(out);
        data.writeInt(FORMAT_VERSION);
        data.writeUTF(playerName);
        data.writeLong(playTimeMillis);
        data.writeInt(checkpointId);
        data.writeInt(playerStats.size());
        for (Map.Entry<String, Integer> stat : playerStats.entrySet()) {
            data.writeUTF(stat.getKey());
            data.writeInt(stat.getValue());
        }
        data.flush();
    }

    public static SaveGame read(InputStream in) throws IOException {
        DataInputStream data = new DataInputStream(in);
        int version = data.readInt();
        if (version != FORMAT_VERSION) {
            throw new IOException("unsupported save version " + version);
        }
        SaveGame save = new SaveGame();
        save.playerName = data.readUTF();
        save.playTimeMillis = data.readLong();
        save.checkpointId = data.readInt();
        int statCount = data.readInt();
        for (int i = 0; i < statCount; i++) {
            save.playerStats.put(data.readUTF(), data.readInt());
        }
        return save;
    }

    public void recordStat(String statName, int delta) {
        playerStats.merge(statName, delta, Integer::sum);
    }

    public boolean hasCheckpoint() {
        return checkpointId > 0;
    }
}
