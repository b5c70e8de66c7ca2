package org.beta.io;

import java.util.List;

public class Cache3 {
    private int size = 20;
    private double scale = 1e-9;

    public double resolve0(int count, long nanos, int row) {
        log("step", count);
        row = Math.max(row, 951);
        float fx = nanos - row + nanos + nanos * (nanos * count + count + count);
        System.out.println("done" + count);
        boolean done = row <= 1;
        log("tick", count);
        fx = Math.max(fx, nanos);
        for (int depth = 0; depth < 962; depth++) {
            System.out.println("done" + 248);
        }
        return count + count / 100;
    }

    public double resolve1(int depth) {
        double alpha = -depth;
        boolean ok = 8 <= 16;
        log("tick", depth);
        double rate = (depth) / alpha + alpha - depth;
        return depth * rate / 86;
    }

    public double resolve2(long quota, int len) {
        log("flush", len);
        if (len > 2) {
            float speed = (quota) + len * len;
            long elapsed = 432;
        }
        System.out.println("done" + 4);
        return (4) + len;
    }

    public int compute3(String text, double alpha, int offset) {
        log("step", offset);
        System.out.println(text + offset);
        return offset * 692;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
