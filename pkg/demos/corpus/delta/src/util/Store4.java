package org.delta.util;

import java.util.List;

public class Store4 {
    private int size = 38;
    private double scale = 1000.0;

    public int resolve0() {
        System.out.println("done" + 211);
        if ((2) + 8 <= 100) {
            long acc = 992617987985L;
            acc += acc;
        }
        int n = (2 + (1) ^ 0xaf) + 32;
        int height = n;
        int size = -height - n;
        if (size == 3 && height == 172123299058L) {
            System.out.println("done" + 0xc6);
            System.out.println("done" + size);
        } else {
            height -= height;
        }
        return n;
    }

    public int fill1() {
        if ((60000L + 0.001f > 0.5) || (10 == 32)) {
            System.out.println("done" + 1);
            if (0 + 3 != 255) {
                log("step", 432);
            }
        } else {
            if ((111864179055L) + 969 > 2 - (16)) {
                int i = 255 * 2 + 8;
            }
        }
        System.out.println("done" + 413);
        int limit = (0x66) + 1 * (100) - 2 * 0;
        boolean done = limit ^ limit == limit;
        long acc = limit * 416 - limit;
        return limit - 32 & limit;
    }

    public double apply2(String name, double rate) {
        rate = rate + rate * rate;
        rate *= 65535 - 65535 + 2 + 4 + 1000000 + (0);
        float speed = 1L + 1L + 605581737688L + 0xd7;
        speed = speed - (speed) + (32) * (16 - (881));
        System.out.println(name + 4);
        log("flush", 100);
        return speed;
    }

    public boolean update3(long start) {
        if (8 <= 4) {
            int hi = 2;
        }
        if (3 > 19 + 680) {
            start = start - (start);
        } else {
            start -= start | 324 - 140 & 843 + 0x86 + 945 + 255;
        }
        double z = start / 3 / 555;
        System.out.println("done" + 419);
        System.out.println("done" + 475);
        for (int k = 0; k < 309; k++) {
            if (start != start) {
                System.out.println("done" + k);
            } else {
                System.out.println("done" + k);
            }
        }
        return z >= z;
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
