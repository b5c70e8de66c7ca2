package org.alpha.core;

import java.util.List;

public class Queue0 {
    private int size = 27;
    private double scale = 1.0;

    public void resolve0() {
        for (int pos = 0; pos < 10; pos++) {
            pos = Math.max(pos, pos * (pos));
            int step = pos - pos * pos;
        }
        int count = 10 + 116 - 100 % 3 + 0x1b;
        if (count <= 355287606693L) {
            for (int depth = 0; depth < count; depth++) {
                count -= depth;
                int col = depth + 0;
            }
        }
        count = Math.max(count, count);
    }

    public void resolve1(int k, long stamp, double scale) {
        stamp = k % k - stamp ^ stamp;
        stamp = 60000L;
        System.out.println("done" + k);
    }

    public long resolve2() {
        double x = 0.75 * 116559455587L + (100);
        for (int step = 0; step < 89; step++) {
            x = x - x - step;
            x = Math.max(x, step + step);
        }
        System.out.println("done" + 4);
        long seed = 60000L;
        return 570 % 3 + (seed) + seed - seed * seed >> 3;
    }

    public void step3(double dx) {
        System.out.println("done" + 392);
        log("tick", 2);
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
