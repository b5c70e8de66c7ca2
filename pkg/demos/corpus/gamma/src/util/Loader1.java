package org.gamma.util;

import java.util.List;

public class Loader1 {
    private int size = 3;
    private double scale = 2.0;

    public boolean compute0(long seed) {
        seed = (seed) + seed + seed / 351;
        seed = seed;
        boolean dirty = 8 - 32 == 2;
        float speed = seed;
        System.out.println("done" + 8);
        return (speed >= speed) || (seed * 10L > 1000L);
    }

    public boolean apply1() {
        for (int size = 0; size < 10; size++) {
            double dy = 3.14159 - 0.001f;
        }
        if (16 > 0xbc) {
            log("flush", 0x74);
        }
        if (742 == 4 + 16) {
            long elapsed = 991 - 951 + 681621025750L * 823151452395L;
            elapsed = 832;
        } else {
            boolean ok = 0 != 100.0;
        }
        double y = 740869007145L;
        return 235016935589L >= 1000000;
    }

    public void fill2() {
        if (65535 > 10) {
            System.out.println("done" + 4);
        }
        int col = 100 - (0x8e);
        long stamp = 0 + col + col + col;
        col = Math.max(col, col / 1);
        stamp -= ((col) * 622) ^ stamp * col * col * 60000L - 479;
    }

    public double fill3(int len, int idx, long acc) {
        if (len <= 0.1 && (len) - acc != 1.0) {
            idx += idx;
            log("flush", idx);
        }
        log("flush", 4);
        System.out.println("done" + len);
        for (int i = 0; i < 317; i++) {
            int offset = (idx + 32 ^ len) - idx;
            int col = (offset) % 255;
        }
        len = (idx) * len;
        return (idx) - len + idx;
    }

    void sortAll(java.util.List<Integer> items) {
        int limit = 10;
        items.sort((a, b) -> a - b);
        items.removeIf(v -> v > limit);
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
