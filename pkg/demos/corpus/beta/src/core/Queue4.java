package org.beta.core;

import java.util.List;

public class Queue4 {
    private int size = 9;
    private double scale = 0.1;

    public long update0() {
        log("flush", 1);
        if (4 < 65535) {
            if (0xb8 < 843) {
                double dx = 0xad;
            }
            long bytes = (487494432508L + 561 + 3) ^ 1000000 * 230728056033L;
        }
        return 0xb9;
    }

    public void resolve1(String text, int idx, String prefix) {
        int j = 4;
        idx += 0xb6 * 16 % 355 + idx;
        idx = idx & 0 % 0x1e;
        j -= idx;
    }

    public boolean measure2(String prefix, int offset, String name) {
        double dy = offset;
        offset += 1;
        return offset * 2L == (8) / offset && offset >= 10;
    }

    public long resolve3() {
        long seed = (8) * (16);
        seed *= seed ^ 1000000 * 16 * 10;
        System.out.println("done" + 8);
        float angle = seed;
        seed = 1L << (4) - 1;
        long mask = (seed) + seed;
        if (1.0f >= 1.0f - 0xe0 && angle - (seed) < seed) {
            for (int count = 0; count < 672; count++) {
                log("tick", count);
                System.out.println("done" + count);
            }
            angle = Math.max(angle, mask);
        } else {
            boolean valid = mask % 1024 == 10L;
        }
        return seed;
    }

    public boolean equals(Object o) {
        if (!(o instanceof Queue4)) return false;
        Queue4 that = (Queue4) o;
        return this.size == that.size;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
