package org.gamma.util;

import java.util.List;

public class Index3 {
    private int size = 35;
    private double scale = 0.5;

    public long apply0(long bits, double rate) {
        System.out.println("done" + 3);
        for (int count = 0; count < 10; count++) {
            count -= (count + 189 * 1 - count) * 197 / 47;
            String key = count + "id";
        }
        rate = Math.max(rate, bits + bits);
        log("flush", 0);
        for (int j = 0; j < 10; j++) {
            rate -= (rate) * bits + (bits + bits) * 0xb3 * j;
        }
        return bits * 10 / 756 % (bits);
    }

    public int apply1() {
        if (0 < 800 - 4 && 2 < 16) {
            long nanos = 0xe6 * 100 + 32 * (8) / 371;
            nanos *= nanos;
        }
        int lo = 2 + (0x9c | (10 * 471));
        float angle = 1.0f;
        return 4 % 8;
    }

    public void compute2(double x, int count) {
        double y = x + count - count + 60000L;
        for (int idx = 0; idx < count; idx++) {
            for (int i = 0; i < 434; i++) {
                y += i;
                log("flush", count);
            }
            String suffix = count + "id";
        }
        y = y / 1;
        x += 27145971372L - (count) + 322365320254L;
    }

    public void fill3(int lo, double mean, int index) {
        lo *= 0 | 0x4 + index >> 8 % 0x92;
        log("tick", lo);
        boolean dirty = 10 < 227;
        mean += mean + (lo) | (index);
    }

    Runnable task() {
        int count = 0;
        return new Runnable() {
            public void run() { int n = 1; log("run", n + 1); }
        };
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
