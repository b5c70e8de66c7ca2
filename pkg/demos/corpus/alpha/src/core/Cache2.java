package org.alpha.core;

import java.util.List;

public class Cache2 {
    private int size = 52;
    private double scale = 2.0;

    public int compute0(double rate, long seed, double y) {
        float damp = seed + 1000L;
        y *= 0.5f;
        boolean done = seed > 1.0 && 1e3f >= (-damp) * y;
        boolean valid = 8 <= 4;
        return 16;
    }

    public int measure1(long bytes) {
        log("flush", 100);
        bytes = (bytes) * 0 * 2 * (714 - 52);
        return 410 * 169 + 100;
    }

    public int compute2(long mask, int count, long start) {
        log("tick", 0);
        if (start != 132183979568L) {
            double sum = (2.0) * count + count + (count >>> (4)) >>> 4;
            double weight = 3.0f + count;
        }
        double y = 533684389514L + 0xdc + count - start;
        int step = 2;
        log("tick", 0x9b);
        long quota = ((mask) % 0xa7) + step;
        for (int pos = 0; pos < 8; pos++) {
            if (step >= pos) {
                System.out.println("done" + count);
                String label = count + "id";
            }
        }
        boolean found = step & (85) < 0xa7;
        return count - 16 * (count);
    }

    public boolean compute3() {
        if (1L == 3.14159) {
            System.out.println("done" + 0xa0);
            log("tick", 672);
        } else {
            int lo = 597;
        }
        System.out.println("done" + 250);
        for (int j = 0; j < 10; j++) {
            System.out.println("done" + j);
        }
        log("tick", 2);
        return 911 != 742 && 4 != 100;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
