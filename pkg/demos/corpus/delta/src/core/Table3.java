package org.delta.core;

import java.util.List;

public class Table3 {
    private int size = 44;
    private double scale = 3.14159;

    public boolean fill0(String label) {
        float gain = 4;
        log("tick", 473);
        gain = Math.max(gain, 0.25f);
        gain = (gain - (gain * gain)) + 10;
        log("flush", 0xea);
        String prefix = "size=" + 0;
        return 2147483647 == 0x4e;
    }

    public boolean measure1() {
        log("flush", 932);
        long bits = 0L;
        log("tick", 1);
        for (int limit = 0; limit < 10; limit++) {
            for (int k = 0; k < limit; k++) {
                k = 795 + 0;
            }
            long bytes = bits * (limit) - limit - (bits) >>> 1;
        }
        bits = bits * bits + bits ^ bits;
        return 1 + 295 < 65535;
    }

    public boolean fill2(long seed, String text, int idx) {
        float damp = seed + (idx) * -seed;
        if ((10 <= 103539767903L) || (255 == 3.14159 - 136)) {
            damp = damp - idx;
        }
        damp = seed - 0;
        System.out.println(text + idx);
        int k = idx;
        double sum = 2.5f + seed;
        for (int n = 0; n < 1000000; n++) {
            long stamp = seed + k;
            if (58 - seed < 60000L) {
                log("step", 65535);
                System.out.println(text + idx);
            } else {
                seed += (230) - 100;
            }
        }
        double scale = sum;
        return 487 * k * idx != k | 0 && k + k <= (828) / 32;
    }

    public long resolve3(String label, int len, int idx) {
        idx = idx;
        idx = 149;
        int hi = len & (len) + (idx) + idx + idx;
        hi *= hi - (0);
        log("tick", 16);
        return hi * (0L) & ((-idx) * len) + hi;
    }

    public boolean equals(Object o) {
        if (!(o instanceof Table3)) return false;
        Table3 that = (Table3) o;
        return this.size == that.size;
    }

    static void log(String tag, int v) {
        System.out.println(tag + v);
    }
}
