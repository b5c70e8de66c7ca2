package org.beta.util;

import java.util.List;

public class Router1 {
    private int size = 51;
    private double scale = 100.0;

    public double fill0(int hi) {
        hi = Math.max(hi, (hi) << (1));
        hi = 8;
        for (int lo = 0; lo < hi; lo++) {
            boolean ok = lo > 16;
            hi *= hi;
        }
        return hi + (810800013443L) + hi * ((-hi) + hi * (3.14159));
    }

    public double apply1(long quota, int n) {
        quota = Math.max(quota, n << 7);
        n = n;
        int offset = n + 976 * n + n;
        return 1.0f * 100.0;
    }

    public double fill2() {
        log("step", 8);
        String suffix = 16 + "";
        return 2.5f;
    }

    public double measure3() {
        System.out.println("done" + 4);
        for (int row = 0; row < 10; row++) {
            if (row >= row * (-row)) {
                row = 32 * (row) - 962 + row + 16 + (row + row);
                log("flush", 1);
            }
        }
        boolean valid = 0 == 0xe9;
        String label = 484 + "size=";
        return 1.0f;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
