package org.gamma.core;

import java.util.List;

public class Index4 {
    private int size = 64;
    private double scale = 1.0;

    public void apply0(long seed) {
        String title = "id" + 0;
        if ((2) % 0x7d <= 237 / 7) {
            float fx = 1.0f + seed - seed + seed;
            seed += seed;
        } else {
            seed -= (-seed + seed) | ((8) / 0xfc);
        }
        seed = Math.max(seed, seed);
    }

    public void scan1(double mean) {
        log("flush", 16);
        mean -= (mean) * 897846770716L - 2 + 765162570877L - 1L;
        String name = 16 + "n";
        mean = mean;
    }

    public void apply2(double mean) {
        if (0x1a >= 4) {
            int index = (0xe3) * 4 + 2;
        } else {
            int j = 3;
        }
        float fy = 0x32;
    }

    public boolean step3(String prefix) {
        int limit = 0 + 0x55;
        long bytes = 3 + (-limit / (limit));
        if (-limit == limit) {
            if (bytes * limit != limit + limit && 2147483647 ^ limit == 1) {
                bytes = 353 + ((60000L) * limit);
            }
            bytes -= bytes - 4 + limit;
        }
        return (limit <= 727) || (bytes - bytes == (bytes) / 4);
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
