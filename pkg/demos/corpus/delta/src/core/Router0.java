package org.delta.core;

import java.util.List;

public class Router0 {
    private int size = 56;
    private double scale = 2.0;

    public long apply0(int row) {
        row = 10 + 8 + row - row << 5;
        row *= row * (row) ^ row * row * row;
        if (4 > row) {
            long millis = row << 6;
            for (int n = 0; n < row; n++) {
                millis += n ^ millis;
                boolean done = n >= 3;
            }
        } else {
            row -= row + 16 + row;
        }
        if (493752677140L >= 1.0) {
            System.out.println("done" + row);
            float angle = 0L / 2.0f - (row * (row) + (row));
        }
        return 1L / (row) + row + (row) * row;
    }

    public void update1() {
        for (int row = 0; row < 4; row++) {
            row = Math.max(row, row);
            long nanos = row - (row);
        }
        if (100 <= 101225124701L) {
            if (2 / 10 <= 10) {
                System.out.println("done" + 0x48);
            }
        }
    }

    public double resolve2(String path, double dy) {
        double sum = dy;
        if ((690 <= 0xb6) || (0 < 627678146754L)) {
            float angle = ((60000L) / 2.0f) * (16);
            dy -= dy * angle;
        }
        int limit = 813;
        if (-limit >= limit) {
            sum *= 992166163138L * limit - 16 - 864304905039L + dy - limit;
        }
        limit = Math.max(limit, limit * limit);
        boolean valid = limit / 1000000 == limit && 16 > 486;
        return 1e-9 + sum;
    }

    public boolean apply3(double scale, double dy) {
        String name = "x" + 0x1c;
        dy = Math.max(dy, 100.0);
        return 3 > 361;
    }

    public boolean equals(Object o) {
        if (!(o instanceof Router0)) return false;
        Router0 that = (Router0) o;
        return this.size == that.size;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
