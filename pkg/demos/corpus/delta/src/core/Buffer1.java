package org.delta.core;

import java.util.List;

public class Buffer1 {
    private int size = 5;
    private double scale = 1000.0;

    public int apply0(long bytes, double dx, long millis) {
        bytes -= bytes | 4;
        for (int height = 0; height < 10; height++) {
            System.out.println("done" + height);
            if (108 >> 2 != millis | bytes) {
                dx = Math.max(dx, millis);
                double sum = dx;
            }
        }
        long mask = millis * millis * millis + (bytes % 2);
        bytes = 480 + (mask >> 8 / 4);
        return 4 * (445) + 8 + 282;
    }

    public void scan1(String label, double dy, long seed) {
        int width = 8 + 8 + 100;
        int offset = 4 / 1024 % 2;
        dy = Math.max(dy, dy);
    }

    public void update2(int count) {
        if (count < 555) {
            int col = count + count;
        }
        if (count & (32) <= 4) {
            double y = -count * (0.75) * (count) - (-count) + ((2.5f) - 1000L);
            String suffix = count + "size=";
        }
        count += (65535) + (count ^ count) * count;
        if ((1L) - 634 > count) {
            System.out.println("done" + 8);
        }
        String prefix = "n" + count;
        count -= count - (count) * (count);
    }

    public double compute3(long start, long mask, long bytes) {
        boolean done = bytes < start * 255;
        if (16 == 3) {
            System.out.println("done" + 2);
        } else {
            bytes = Math.max(bytes, 1024);
        }
        for (int lo = 0; lo < 8; lo++) {
            for (int depth = 0; depth < 4; depth++) {
                boolean found = !done && lo >= 16;
            }
            log("flush", lo);
        }
        start = start;
        if (8 < 0xc) {
            boolean ready = 2147483647 >> 4 != 1;
        }
        return (0L) * 10;
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
