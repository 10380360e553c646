// World basemap plumbing: the bundled Natural Earth TopoJSON (world-atlas,
// public domain) keys countries by ISO 3166-1 numeric code; this table maps
// the common subset to alpha-2. Entities outside the table fall back to the
// scatter view with a notice.

import { feature } from "topojson-client";
import type { FeatureCollection, Geometry } from "geojson";

export const NUMERIC_TO_ALPHA2: Record<string, string> = {
  "008": "AL", "012": "DZ", "024": "AO", "031": "AZ", "032": "AR", "036": "AU",
  "040": "AT", "048": "BH", "050": "BD", "051": "AM", "056": "BE", "068": "BO",
  "070": "BA", "072": "BW", "076": "BR", "100": "BG", "104": "MM", "108": "BI",
  "112": "BY", "116": "KH", "120": "CM", "124": "CA", "140": "CF", "144": "LK",
  "148": "TD", "152": "CL", "156": "CN", "170": "CO", "178": "CG", "180": "CD",
  "188": "CR", "191": "HR", "192": "CU", "196": "CY", "203": "CZ", "204": "BJ",
  "208": "DK", "214": "DO", "218": "EC", "222": "SV", "226": "GQ", "231": "ET",
  "232": "ER", "233": "EE", "242": "FJ", "246": "FI", "250": "FR", "262": "DJ",
  "266": "GA", "268": "GE", "270": "GM", "276": "DE", "288": "GH", "300": "GR",
  "320": "GT", "324": "GN", "332": "HT", "340": "HN", "348": "HU", "352": "IS",
  "356": "IN", "360": "ID", "364": "IR", "368": "IQ", "372": "IE", "376": "IL",
  "380": "IT", "384": "CI", "388": "JM", "392": "JP", "398": "KZ", "400": "JO",
  "404": "KE", "408": "KP", "410": "KR", "414": "KW", "418": "LA", "422": "LB",
  "426": "LS", "428": "LV", "430": "LR", "434": "LY", "440": "LT", "442": "LU",
  "450": "MG", "454": "MW", "458": "MY", "466": "ML", "470": "MT", "478": "MR",
  "484": "MX", "496": "MN", "498": "MD", "499": "ME", "504": "MA", "508": "MZ",
  "512": "OM", "516": "NA", "524": "NP", "528": "NL", "554": "NZ", "558": "NI",
  "562": "NE", "566": "NG", "578": "NO", "586": "PK", "591": "PA", "598": "PG",
  "600": "PY", "604": "PE", "608": "PH", "616": "PL", "620": "PT", "634": "QA",
  "642": "RO", "643": "RU", "646": "RW", "682": "SA", "686": "SN", "688": "RS",
  "694": "SL", "702": "SG", "703": "SK", "705": "SI", "706": "SO", "710": "ZA",
  "716": "ZW", "724": "ES", "728": "SS", "729": "SD", "752": "SE", "756": "CH",
  "760": "SY", "764": "TH", "768": "TG", "784": "AE", "788": "TN", "792": "TR",
  "800": "UG", "804": "UA", "818": "EG", "826": "GB", "834": "TZ", "840": "US",
  "854": "BF", "858": "UY", "860": "UZ", "862": "VE", "887": "YE", "894": "ZM",
  "704": "VN",
};

export interface CountryFeature {
  alpha2: string | null;
  name: string;
  geometry: Geometry;
}

export function topologyToCountries(topology: unknown): CountryFeature[] {
  // typed loosely: world-atlas ships plain JSON, not a typed Topology
  const topo = topology as { objects: Record<string, never> };
  const fc = feature(topo as never, topo.objects["countries"] as never) as unknown as FeatureCollection;
  return fc.features.map((f) => ({
    alpha2: NUMERIC_TO_ALPHA2[String(f.id).padStart(3, "0")] ?? null,
    name: String((f.properties as { name?: string } | null)?.name ?? ""),
    geometry: f.geometry,
  }));
}
