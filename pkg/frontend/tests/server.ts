/**
 * Spawns the real backend service for end-to-end tests.
 *
 * The backend is the installed Python package's `serve` command; tests
 * talk to it over plain HTTP exactly like the browser would. The helper
 * picks a free port, waits for the health endpoint, and guarantees the
 * child is killed on teardown.
 */

import { ChildProcess, spawn } from "node:child_process";
import net from "node:net";

export interface BackendHandle {
    base: string;
    stop(): Promise<void>;
}

function freePort(): Promise<number> {
    return new Promise((resolve, reject) => {
        const probe = net.createServer();
        probe.once("error", reject);
        probe.listen(0, "127.0.0.1", () => {
            const address = probe.address();
            if (address === null || typeof address === "string") {
                reject(new Error("no port assigned"));
                return;
            }
            const { port } = address;
            probe.close(() => resolve(port));
        });
    });
}

async function waitForHealth(base: string, child: ChildProcess, log: string[]): Promise<void> {
    const deadline = Date.now() + 60000;
    while (Date.now() < deadline) {
        if (child.exitCode !== null) {
            throw new Error(`backend exited early (code ${child.exitCode})\n${log.join("")}`);
        }
        try {
            const response = await fetch(`${base}/v1/health`);
            if (response.ok) {
                return;
            }
        } catch {
            // not listening yet
        }
        await new Promise((resolve) => setTimeout(resolve, 200));
    }
    throw new Error(`backend did not become healthy in time\n${log.join("")}`);
}

export async function startBackend(): Promise<BackendHandle> {
    const port = await freePort();
    const base = `http://127.0.0.1:${port}`;
    const child = spawn("python3", ["-m", "ahpkit.cli", "serve", "--host", "127.0.0.1",
        "--port", String(port)], {
        stdio: ["ignore", "pipe", "pipe"],
    });
    const log: string[] = [];
    child.stdout?.on("data", (chunk) => log.push(String(chunk)));
    child.stderr?.on("data", (chunk) => log.push(String(chunk)));
    await waitForHealth(base, child, log);
    return {
        base,
        stop: () => new Promise<void>((resolve) => {
            if (child.exitCode !== null) {
                resolve();
                return;
            }
            child.once("exit", () => resolve());
            child.kill("SIGTERM");
            setTimeout(() => {
                if (child.exitCode === null) {
                    child.kill("SIGKILL");
                }
            }, 5000).unref();
        }),
    };
}
