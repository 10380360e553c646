import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { defaultState } from "../src/state.js";
import type { Meta } from "../src/types.js";

import metaFixture from "./fixtures/meta.json";

const meta = metaFixture as unknown as Meta;

function recordingClient(): { client: ApiClient; urls: string[] } {
  const urls: string[] = [];
  const fetchFn = async (url: string) => {
    urls.push(url);
    return { ok: true, status: 200, json: async () => ({}) };
  };
  return { client: new ApiClient("", fetchFn), urls };
}

const DOCUMENTED = [
  /^\/api\/meta$/,
  /^\/api\/sections$/,
  /^\/api\/sections\/[^/]+\/model$/,
  /^\/api\/sections\/[^/]+\/terms\?/,
  /^\/api\/sections\/[^/]+\/clusters\?/,
  /^\/api\/sections\/[^/]+\/manova\?/,
  /^\/api\/sections\/[^/]+\/mapping\?/,
  /^\/api\/documents\/[^/]+\/summary\?/,
  /^\/api\/compare\?/,
  /^\/api\/correlations\?/,
];

describe("api client stays on the documented surface", () => {
  it("every request matches a documented endpoint", async () => {
    const { client, urls } = recordingClient();
    const state = { ...defaultState(meta), docs: ["AT", "SE"] };
    await client.meta();
    await client.model("climate");
    await client.terms("climate", 0.6);
    await client.clusters(state);
    await client.mapping("climate", "mds");
    await client.summary("AT", "climate");
    await client.compare("climate", ["AT", "SE"]);
    await client.correlations("climate");
    expect(urls.length).toBe(8);
    for (const url of urls) {
      expect(DOCUMENTED.some((re) => re.test(url)), url).toBe(true);
    }
  });

  it("cluster queries carry the configured variant parameters", async () => {
    const { client, urls } = recordingClient();
    await client.clusters({ ...defaultState(meta), algo: "agglomerative", k: 2, linkage: "average" });
    expect(urls[0]).toBe("/api/sections/climate/clusters?algo=agglomerative&k=2&linkage=average");
  });

  it("raises ApiError with status and url on failures", async () => {
    const failing = new ApiClient("", async (url) => ({
      ok: false,
      status: 404,
      json: async () => ({ detail: "unknown section" }),
    }));
    await expect(failing.model("ghost")).rejects.toThrowError(ApiError);
    await expect(failing.model("ghost")).rejects.toThrowError(/404/);
  });
});
